#pragma once

/**
 * @file verify.hpp
 * @brief Certificate-producing verification of the strong D(q) property.
 *
 * A tuple {a_1, ..., a_m} is a strong D(q)-tuple when a_i a_j + q is a
 * rational square for all i <= j, including i = j. Every passing condition
 * carries an exact square-root witness; failing conditions keep their value
 * for diagnosability. Everything is exact -- there are no false positives
 * or negatives.
 */

#include <optional>
#include <vector>

#include "dioforge/construct.hpp"
#include "dioforge/rat.hpp"

namespace dioforge {

struct Condition {
    int i;
    int j;
    Rat value;  // a_i * a_j + q
    std::optional<SquareCertificate> certificate;
};

struct VerifyReport {
    Rat q;
    std::vector<Rat> elements;
    std::vector<Condition> conditions;  // all pairs i <= j, in row order
    bool all_pass = false;
};

/// Throws MalformedTuple on zero or duplicate elements.
VerifyReport verify_strong_tuple(const Rat& q, const std::vector<Rat>& elements);

inline VerifyReport verify_tuple(const StrongTuple& s) {
    return verify_strong_tuple(s.q, s.elements);
}

/// Verifies the embedded q = 2019 triple; all six conditions must certify.
VerifyReport verify_fixture_2019();

} // namespace dioforge

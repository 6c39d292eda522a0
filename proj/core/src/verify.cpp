#include "dioforge/verify.hpp"

#include "dioforge/fixtures.hpp"

namespace dioforge {

VerifyReport verify_strong_tuple(const Rat& q, const std::vector<Rat>& elements) {
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].is_zero())
            raise(Errc::malformed_tuple, "element " + std::to_string(i) + " is zero");
        for (size_t j = i + 1; j < elements.size(); ++j)
            if (elements[i] == elements[j])
                raise(Errc::malformed_tuple, "duplicate element " + elements[i].str());
    }
    VerifyReport report{q, elements, {}, true};
    for (size_t i = 0; i < elements.size(); ++i) {
        for (size_t j = i; j < elements.size(); ++j) {
            Rat value = elements[i] * elements[j] + q;
            auto cert = is_rational_square(value);
            if (!cert) report.all_pass = false;
            report.conditions.push_back(
                Condition{static_cast<int>(i), static_cast<int>(j), std::move(value), std::move(cert)});
        }
    }
    return report;
}

VerifyReport verify_fixture_2019() {
    const PaperFixtures& fx = paper_fixtures();
    return verify_strong_tuple(fx.q2019.q, {fx.q2019.a, fx.q2019.b, fx.q2019.c});
}

} // namespace dioforge

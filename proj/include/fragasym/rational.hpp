#ifndef FRAGASYM_RATIONAL_HPP
#define FRAGASYM_RATIONAL_HPP

#include <cstdint>

namespace fragasym {

struct RationalFit {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double error = 0.0;   // |x - num/den|
    bool found = false;   // a convergent within tolerance and denominator bound
    bool decisive = false;  // error far below the Diophantine scale ~1/den^2
};

// Best rational approximation of x by continued-fraction convergents with
// denominator <= max_den. `found` is set when the approximation error is
// below tol. `decisive` additionally requires error * den^2 to be small:
// a generic irrational's convergents have error ~ 1/den^2, so a match far
// below that scale signals a genuine rational given at double precision.
RationalFit best_rational(double x, std::int64_t max_den, double tol);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace fragasym

#endif

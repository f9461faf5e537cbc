#ifndef FRAGASYM_DATUM_HPP
#define FRAGASYM_DATUM_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fragasym {

using Complex = std::complex<double>;

enum class DatumForm {
    LogGaussian,
    TwoSidedPower,
    Indicator,
    CompactBump,
    Tabulated,
    PowerTail
};

std::string to_string(DatumForm f);

// u0(x) ~ a0 * x^{-q0} + O(x^{-r}) as x -> infinity.
struct UpperTail {
    double a0 = 0.0;
    double q0 = 0.0;
    double r = 0.0;  // > q0, +inf allowed
};

// u0(x) ~ b0 * x^{-p0} + O(x^{-rho}) as x -> 0.
struct LowerTail {
    double b0 = 0.0;
    double p0 = 0.0;
    double rho = 0.0;  // < p0, -inf allowed
};

// Initial datum u0 >= 0 on (0, infinity) with its Mellin strip (p0, q0),
// optional power tails, and mass M = \int x u0 dx computed at construction.
class InitialDatum {
public:
    // exp(-(log x - y_center)^2 / (2 width^2)); entire Mellin transform.
    static InitialDatum log_gaussian(double y_center, double width = 1.0);
    // x^{-p0} for x <= 1, x^{-q0} for x > 1; U0(s) = 1/(s-p0) + 1/(q0-s).
    static InitialDatum two_sided_power(double p0, double q0);
    // Indicator of (0, 1); U0(s) = 1/s.
    static InitialDatum indicator();
    // Smooth bump supported on [x_lo, x_hi] in log coordinates; entire.
    static InitialDatum compact_bump(double x_lo, double x_hi);
    // Piecewise-linear values on an increasing positive grid, zero outside.
    static InitialDatum tabulated(std::vector<double> x_grid,
                                  std::vector<double> values, double p0,
                                  double q0);
    // a0 * x^{-q0} for x >= 1, zero below; exact upper tail (r = +inf).
    static InitialDatum power_tail(double a0, double q0);

    DatumForm form() const { return form_; }
    double evaluate(double x) const;
    double p0() const { return p0_; }
    double q0() const { return q0_; }
    double mass() const { return mass_; }
    const std::optional<UpperTail>& upper_tail() const { return upper_tail_; }
    const std::optional<LowerTail>& lower_tail() const { return lower_tail_; }
    // Declared tail data for forms (e.g. tabulated) whose factories cannot
    // derive it; validate_datum checks the declaration against samples.
    void declare_upper_tail(UpperTail tail) { upper_tail_ = tail; }
    void declare_lower_tail(LowerTail tail) { lower_tail_ = tail; }
    bool has_closed_form_mellin() const { return static_cast<bool>(closed_mellin_); }

    // Smallest/largest x outside of which u0 is identically zero (0 / +inf
    // when unbounded); used by grid builders.
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }

    // Parameters as given to the factory (used for serialization).
    const std::vector<double>& params() const { return params_; }
    const std::vector<double>& tab_grid() const { return tab_grid_; }
    const std::vector<double>& tab_values() const { return tab_values_; }

    Complex mellin(Complex s) const;
    Complex meromorphic_extension(Complex s) const;

private:
    InitialDatum() = default;
    Complex mellin_quadrature(Complex s, double lo, double hi,
                              const std::function<double(double)>& f) const;

    DatumForm form_ = DatumForm::Indicator;
    std::function<double(double)> eval_;
    std::function<Complex(Complex)> closed_mellin_;
    double p0_ = 0.0;
    double q0_ = 0.0;
    std::optional<UpperTail> upper_tail_;
    std::optional<LowerTail> lower_tail_;
    double mass_ = 0.0;
    double support_lo_ = 0.0;
    double support_hi_ = 0.0;
    std::vector<double> params_;
    std::vector<double> tab_grid_, tab_values_;
};

struct DatumCheck {
    std::string name;
    double measured = 0.0;
    bool pass = false;
};

struct DatumReport {
    std::vector<DatumCheck> checks;
    std::vector<std::string> warnings;
    bool pass = false;
};

// Validates nonnegativity on a log-spaced sample, integrability of
// (1+x) u0, declared upper-tail behavior, and (when present) agreement of
// the closed-form Mellin transform with direct quadrature.
DatumReport validate_datum(const InitialDatum& datum);

}  // namespace fragasym

#endif

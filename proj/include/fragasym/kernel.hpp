#ifndef FRAGASYM_KERNEL_HPP
#define FRAGASYM_KERNEL_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace fragasym {

using Complex = std::complex<double>;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

enum class KernelForm { Homogeneous, Power, Mitosis, Atoms, Tabulated, Mixture };

std::string to_string(KernelForm f);

struct KernelAtom {
    double sigma = 0.0;   // fragment-size ratio, in (0, 1)
    double weight = 0.0;  // mass of the Dirac atom, > 0
};

// Nonnegative density on (0, 1), piecewise linear between grid nodes,
// zero outside [grid.front(), grid.back()].
struct PiecewiseLinearDensity {
    std::vector<double> grid;
    std::vector<double> values;

    double at(double z) const;
    bool empty() const { return grid.empty(); }
};

// The fragment-size measure k0 on (0, 1), normalized so that the first
// moment is one. Supports closed forms (uniform placement k0 = 2; power
// densities (a+2) z^a; equal binary splitting 2 delta_{1/2}), finite atom
// lists, tabulated densities, and density+atom mixtures.
class FragmentationKernel {
public:
    static FragmentationKernel homogeneous();
    static FragmentationKernel power(double a);  // requires a > -1
    static FragmentationKernel mitosis();
    static FragmentationKernel atoms(std::vector<KernelAtom> atoms);
    static FragmentationKernel tabulated(std::vector<double> grid,
                                         std::vector<double> values,
                                         double norm_tolerance = 1e-6);
    static FragmentationKernel mixture(PiecewiseLinearDensity density,
                                       std::vector<KernelAtom> atoms,
                                       double norm_tolerance = 1e-6);

    KernelForm form() const { return form_; }
    double p1() const { return p1_; }
    double norm_tolerance() const { return norm_tolerance_; }
    double power_exponent() const { return power_a_; }
    const std::vector<KernelAtom>& atom_list() const { return atoms_; }
    const PiecewiseLinearDensity& density() const { return density_; }
    bool has_density() const { return !density_.empty(); }
    bool is_purely_atomic() const { return !atoms_.empty() && density_.empty(); }

    // Mellin transform K(s) = \int_0^1 z^{s-1} dk0(z), Re(s) > p1.
    Complex mellin(Complex s) const;
    // \int_0^1 (log z)^order z^{s-1} dk0(z), order in {1, 2, 3}.
    Complex mellin_derivative(Complex s, int order) const;

    double K(double s) const { return mellin(Complex(s, 0.0)).real(); }
    double dK(double s) const { return mellin_derivative(Complex(s, 0.0), 1).real(); }
    double d2K(double s) const { return mellin_derivative(Complex(s, 0.0), 2).real(); }
    double d3K(double s) const { return mellin_derivative(Complex(s, 0.0), 3).real(); }

    // F_cum(x) = \int_0^x y dk0(y); a cumulative distribution with F_cum(1)=1.
    double cumulative_first_moment(double x) const;

    // Moments \int z^m dk0(z) for m = 0, 1 via exact sums plus quadrature.
    double moment(int m) const;

private:
    FragmentationKernel() = default;
    void check_domain(const Complex& s) const;
    Complex density_mellin(Complex s, int log_order) const;

    KernelForm form_ = KernelForm::Homogeneous;
    double power_a_ = 0.0;
    std::vector<KernelAtom> atoms_;
    PiecewiseLinearDensity density_;
    double p1_ = 0.0;
    double norm_tolerance_ = 1e-10;
};

struct AdmissibilityCheck {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    bool pass = false;
};

struct AdmissibilityReport {
    std::vector<AdmissibilityCheck> checks;
    bool pass = false;
};

// Validates the measure against its defining constraints: first moment one,
// total mass strictly greater than one, atoms strictly inside (0, 1),
// K(2) = 1 and K(1) > 1.
AdmissibilityReport check_admissible(const FragmentationKernel& kernel);

// p1 = inf { p : \int z^{p-1} dk0 < infinity }. For tabulated densities the
// value is estimated from a small-z power-law fit with a safety margin.
double lower_abscissa(const FragmentationKernel& kernel);

struct ConditionHResult {
    bool satisfied = false;
    double theta = 0.0;
    std::vector<std::int64_t> exponents;
    double v_star = 0.0;  // 2*pi / log(theta), negative
    std::string certificate;
};

// Decides whether the atom locations are all integer powers of a common base
// theta with setwise-coprime exponents. Rational dependence of the log-ratios
// is tested by continued-fraction convergents with bounded denominator.
ConditionHResult condition_h(const std::vector<KernelAtom>& atoms,
                             std::int64_t max_denominator = 1000000,
                             double tolerance = 1e-9);

}  // namespace fragasym

#endif

#include "fragasym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "fragasym/errors.hpp"

namespace fragasym {

namespace {

// Gauss-Kronrod 7-15 pair on [-1, 1].
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    Complex kronrod;
    double error;
    double abs_integral;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);
    Complex resk = kWgk[7] * fv[7];
    Complex resg = kWg[3] * fv[7];
    double resabs = kWgk[7] * std::abs(fv[7]);
    for (int j = 0; j < 7; ++j) {
        const Complex sum = fv[j] + fv[14 - j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    PanelResult r;
    r.kronrod = resk * h;
    r.error = std::abs(resk - resg) * std::abs(h);
    r.abs_integral = resabs * std::abs(h);
    return r;
}

}  // namespace

Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  const QuadratureOptions& opts) {
    if (a == b) return Complex(0.0, 0.0);

    struct Item {
        double a, b;
        PanelResult r;
    };
    auto cmp = [](const Item& x, const Item& y) { return x.r.error < y.r.error; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);

    const int n0 = std::max(1, opts.min_panels);
    Complex total(0.0, 0.0);
    double err_total = 0.0;
    double abs_total = 0.0;
    for (int i = 0; i < n0; ++i) {
        const double pa = a + (b - a) * i / n0;
        const double pb = a + (b - a) * (i + 1) / n0;
        PanelResult r = gk15(f, pa, pb);
        total += r.kronrod;
        err_total += r.error;
        abs_total += r.abs_integral;
        heap.push({pa, pb, r});
    }

    int used = n0;
    auto tol = [&]() {
        return std::max(opts.abs_tol, opts.rel_tol * std::max(std::abs(total), 1e-300));
    };
    while (err_total > tol()) {
        if (used >= opts.max_subdivisions)
            throw QuadratureError("adaptive quadrature budget exhausted (err=" +
                                  std::to_string(err_total) + ")");
        Item worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (m == worst.a || m == worst.b) {
            // Interval at machine resolution; accept its estimate.
            continue;
        }
        PanelResult rl = gk15(f, worst.a, m);
        PanelResult rr = gk15(f, m, worst.b);
        total += rl.kronrod + rr.kronrod - worst.r.kronrod;
        err_total += rl.error + rr.error - worst.r.error;
        heap.push({worst.a, m, rl});
        heap.push({m, worst.b, rr});
        ++used;
    }
    (void)abs_total;
    return total;
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureOptions& opts) {
    return integrate([&](double x) { return Complex(f(x), 0.0); }, a, b, opts).real();
}

Complex integrate_line(const std::function<Complex(double)>& f,
                       double initial_halfwidth, const QuadratureOptions& opts) {
    double w = initial_halfwidth;
    Complex total = integrate(f, -w, w, opts);
    for (int iter = 0; iter < 40; ++iter) {
        const double w2 = 2.0 * w;
        Complex shell = integrate(f, w, w2, opts) + integrate(f, -w2, -w, opts);
        total += shell;
        w = w2;
        if (std::abs(shell) <= std::max(opts.abs_tol,
                                        opts.rel_tol * std::max(std::abs(total), 1e-300)))
            return total;
    }
    throw QuadratureError("integrate_line: window growth did not converge");
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

std::vector<double> gregory_weights(int n, double h) {
    std::vector<double> w(n, h);
    if (n < 2) {
        if (n == 1) w[0] = 0.0;
        return w;
    }
    if (n < 8) {
        // Plain trapezoid for short ranges.
        w.front() = 0.5 * h;
        w.back() = 0.5 * h;
        return w;
    }
    // Fourth-order Gregory end corrections.
    static const double kEnd[4] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0, 1.0};
    for (int j = 0; j < 4; ++j) {
        w[j] = kEnd[j] * h;
        w[n - 1 - j] = kEnd[j] * h;
    }
    return w;
}

}  // namespace fragasym

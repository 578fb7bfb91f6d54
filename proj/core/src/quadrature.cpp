#include "solvdiff/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace solvdiff {

namespace {

// 15-point Kronrod / 7-point Gauss pair on [-1,1] (QUADPACK dqk15 nodes).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    double value;
    double error;
    bool finite_ok;
};

Panel eval_panel(const std::function<double(double)>& g, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = g(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double fv[15];
    fv[14] = fc;
    bool ok = std::isfinite(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = g(c - dx);
        const double f2 = g(c + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        ok = ok && std::isfinite(f1) && std::isfinite(f2);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (f1 + f2);
    }
    const double value = resk * h;
    // QUADPACK-style error estimate via the mean absolute deviation
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return Panel{lo, hi, value, err, ok};
}

}  // namespace

double QuadratureResult::require(const char* what) const {
    if (!converged)
        throw std::runtime_error(std::string("quadrature did not converge for ") +
                                 what);
    return value;
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureSpec& spec) {
    if (!(lo < hi)) throw std::invalid_argument("integrate: requires lo < hi");
    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);

    IntervalTransform tr = spec.transform;
    if (tr == IntervalTransform::none && (lo_inf || hi_inf))
        tr = IntervalTransform::map_to_infinity;

    // Build the transformed integrand g on a finite open core (t_lo, t_hi).
    std::function<double(double)> g;
    double t_lo = 0.0, t_hi = 1.0;
    switch (tr) {
        case IntervalTransform::none:
            g = f;
            t_lo = lo;
            t_hi = hi;
            break;
        case IntervalTransform::map_to_infinity:
            if (lo_inf && hi_inf) {
                // x = t/(1-t^2) on (-1,1)
                g = [&f](double t) {
                    const double om = 1.0 - t * t;
                    const double x = t / om;
                    const double jac = (1.0 + t * t) / (om * om);
                    return f(x) * jac;
                };
                t_lo = -1.0;
                t_hi = 1.0;
            } else if (hi_inf) {
                // x = lo + t/(1-t) on (0,1)
                g = [&f, lo](double t) {
                    const double om = 1.0 - t;
                    return f(lo + t / om) / (om * om);
                };
            } else if (lo_inf) {
                // x = hi - t/(1-t) on (0,1)
                g = [&f, hi](double t) {
                    const double om = 1.0 - t;
                    return f(hi - t / om) / (om * om);
                };
            } else {
                g = f;
                t_lo = lo;
                t_hi = hi;
            }
            break;
        case IntervalTransform::sqrt_map:
            if (lo_inf)
                throw std::invalid_argument(
                    "integrate: sqrt_map requires a finite lower endpoint");
            if (hi_inf) {
                // x = lo + (t/(1-t))^2 on (0,1)
                g = [&f, lo](double t) {
                    const double om = 1.0 - t;
                    const double u = t / om;
                    return f(lo + u * u) * 2.0 * u / (om * om);
                };
            } else {
                // x = lo + u^2, u in (0, sqrt(hi-lo))
                g = [&f, lo](double u) { return f(lo + u * u) * 2.0 * u; };
                t_hi = std::sqrt(hi - lo);
            }
            break;
    }

    QuadratureResult res;
    std::vector<Panel> panels;
    panels.push_back(eval_panel(g, t_lo, t_hi));
    res.panels = 1;

    const double min_width = 64.0 * std::numeric_limits<double>::epsilon();
    for (int split = 0; split < spec.max_subdivisions; ++split) {
        double total = 0.0, err = 0.0;
        for (const Panel& p : panels) {
            total += p.value;
            err += p.error;
        }
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        bool any_bad = false;
        for (const Panel& p : panels) any_bad = any_bad || !p.finite_ok;
        if (err <= tol && !any_bad) {
            res.value = total;
            res.error_estimate = err;
            res.converged = true;
            res.panels = static_cast<int>(panels.size());
            return res;
        }
        // split the worst panel (non-finite panels first)
        size_t worst = 0;
        double worst_key = -1.0;
        for (size_t i = 0; i < panels.size(); ++i) {
            const double key = panels[i].finite_ok
                                   ? panels[i].error
                                   : std::numeric_limits<double>::infinity();
            const double width = panels[i].hi - panels[i].lo;
            if (key > worst_key &&
                width > min_width * std::max(1.0, std::abs(panels[i].lo))) {
                worst_key = key;
                worst = i;
            }
        }
        if (worst_key < 0.0) break;  // nothing splittable left
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.lo + p.hi);
        panels[worst] = eval_panel(g, p.lo, mid);
        panels.push_back(eval_panel(g, mid, p.hi));
    }

    double total = 0.0, err = 0.0;
    bool any_bad = false;
    for (const Panel& p : panels) {
        total += p.value;
        err += p.error;
        any_bad = any_bad || !p.finite_ok;
    }
    res.value = total;
    res.error_estimate = err;
    res.panels = static_cast<int>(panels.size());
    res.converged =
        !any_bad && err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return res;
}

}  // namespace solvdiff

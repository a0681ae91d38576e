#include "chainrad/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "chainrad/errors.hpp"

namespace chainrad::quadrature {

namespace {

// Kronrod abscissae; odd indices are the Gauss 7-point nodes, index 7 is the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(centre - dx) + f(centre + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opts) {
    const std::size_t start = std::max<std::size_t>(1, opts.initial_panels);
    std::vector<Panel> heap;
    heap.reserve(start + 2);
    const double width = (hi - lo) / static_cast<double>(start);
    for (std::size_t i = 0; i < start; ++i) {
        const double a = lo + width * static_cast<double>(i);
        const double b = i + 1 == start ? hi : a + width;
        heap.push_back(gauss_kronrod(f, a, b));
    }
    std::make_heap(heap.begin(), heap.end());

    Result r;
    r.evaluations = 15 * start;
    for (;;) {
        // Summed afresh each round so the total never drifts from the panels.
        double value = 0.0, error = 0.0;
        for (const auto& p : heap) {
            value += p.value;
            error += p.error;
        }
        r.value = value;
        r.error_estimate = error;
        r.panels = heap.size();
        if (error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) return r;
        if (heap.size() >= opts.max_panels) {
            std::ostringstream os;
            os << "quadrature did not converge: estimate " << value << " with error " << error
               << " after " << heap.size() << " panels";
            throw AccuracyError(os.str(), value, error);
        }
        std::pop_heap(heap.begin(), heap.end());
        const Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        heap.push_back(gauss_kronrod(f, worst.lo, mid));
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(gauss_kronrod(f, mid, worst.hi));
        std::push_heap(heap.begin(), heap.end());
        r.evaluations += 30;
    }
}

}  // namespace chainrad::quadrature

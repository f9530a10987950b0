#include "mlcp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <vector>

namespace mlcp::quad {

namespace {

// QUADPACK qk21 abscissae and weights; xgk[1], xgk[3], ... are the 10-point
// Gauss nodes.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a;
    double b;
    QuadResult r;
    bool operator<(const Panel& o) const { return r.error < o.r.error; }
};

}  // namespace

QuadResult gk21(const Integrand& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::abs(hlgth);

    const double fc = f(centr);
    double resg = 0.0;
    double resk = wgk[10] * fc;
    double resabs = std::abs(resk);
    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * xgk[jtw];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += wg[j] * (f1 + f2);
        resk += wgk[jtw] * (f1 + f2);
        resabs += wgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * xgk[jtwm1];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += wgk[jtwm1] * (f1 + f2);
        resabs += wgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }
    const double reskh = resk * 0.5;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    QuadResult out;
    out.value = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double epmach = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * epmach)) err = std::max(epmach * 50.0 * resabs, err);
    out.error = err;
    out.evaluations = 21;
    return out;
}

QuadResult adaptive(const Integrand& f, double a, double b, double abs_tol, double rel_tol,
                    int max_panels) {
    std::priority_queue<Panel> heap;
    QuadResult first = gk21(f, a, b);
    heap.push({a, b, first});
    double total = first.value;
    double total_err = first.error;
    long evals = first.evaluations;
    int panels = 1;
    auto done = [&] { return total_err <= std::max(abs_tol, rel_tol * std::abs(total)); };
    while (!done() && panels < max_panels) {
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) break;
        heap.pop();
        const QuadResult left = gk21(f, worst.a, mid);
        const QuadResult right = gk21(f, mid, worst.b);
        evals += left.evaluations + right.evaluations;
        heap.push({worst.a, mid, left});
        heap.push({mid, worst.b, right});
        ++panels;
        // resum from scratch now and then so rounding in the running totals
        // does not drift
        if (panels % 64 == 0) {
            total = 0.0;
            total_err = 0.0;
            auto copy = heap;
            while (!copy.empty()) {
                total += copy.top().r.value;
                total_err += copy.top().r.error;
                copy.pop();
            }
        } else {
            total += left.value + right.value - worst.r.value;
            total_err += left.error + right.error - worst.r.error;
        }
    }
    // final exact resummation
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadResult out;
    for (const Panel& p : all) {
        out.value += p.r.value;
        out.error += p.r.error;
    }
    out.evaluations = evals;
    out.converged = out.error <= std::max(abs_tol, rel_tol * std::abs(out.value));
    return out;
}

QuadResult graded(const Integrand& f, double a, double b, Singular where, double abs_tol) {
    const double width = b - a;
    QuadResult out;
    out.evaluations = 0;
    double prev = 0.0;
    double last = 0.0;
    int quiet = 0;
    for (int k = 0; k < 1000; ++k) {
        const double inner = width * std::ldexp(1.0, -(k + 1));
        const double outer = width * std::ldexp(1.0, -k);
        double lo;
        double hi;
        if (where == Singular::Left) {
            lo = a + inner;
            hi = (k == 0) ? b : a + outer;
        } else {
            lo = (k == 0) ? a : b - outer;
            hi = b - inner;
        }
        if (!(lo < hi)) break;
        const double tol_k = abs_tol / (4.0 * (1.0 + k) * (1.0 + k));
        const QuadResult r = adaptive(f, lo, hi, tol_k, 1e-14);
        out += r;
        prev = last;
        last = r.value;
        if (std::abs(r.value) + r.error < abs_tol * 1e-3) {
            if (++quiet >= 3) {
                const double ratio = prev != 0.0 ? std::abs(last / prev) : 0.0;
                if (ratio < 1.0) {
                    out.error += std::abs(last) * ratio / (1.0 - ratio);
                    return out;
                }
            }
        } else {
            quiet = 0;
        }
    }
    // ran out of representable panels: the remainder is bounded by the last one
    out.error += std::abs(last);
    return out;
}

}  // namespace mlcp::quad

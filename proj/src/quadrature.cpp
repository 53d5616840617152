#include "uenergy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "uenergy/errors.hpp"

namespace uenergy {

namespace {

// 15-point Kronrod nodes on [-1, 1] (nonnegative half) and weights; the
// odd-indexed nodes are the 7-point Gauss nodes.
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * wgk[7];
  double gauss = fc * wg[3];
  double resabs = std::fabs(fc) * wgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const double f1 = f(c - dx), f2 = f(c + dx);
    kronrod += wgk[j] * (f1 + f2);
    resabs += wgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
  }
  // never claim better than rounding allows
  const double floor = 50 * std::numeric_limits<double>::epsilon() * resabs * std::fabs(h);
  return {a, b, kronrod * h, std::max(std::fabs((kronrod - gauss) * h), floor)};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                    int max_panels) {
  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, a, b);
  double total = first.value, err = first.error;
  panels.push(first);
  int count = 1;
  while (err > abs_tol) {
    if (count >= max_panels)
      throw convergence_error("adaptive quadrature did not reach tolerance", total, err);
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(f, worst.a, mid), right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // re-sum to shed the drift from incremental updates
  total = 0;
  err = 0;
  while (!panels.empty()) {
    total += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {total, err, count};
}

} // namespace uenergy

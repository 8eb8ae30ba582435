#include "duval/cubature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <thread>

namespace duval {

namespace {

// Gauss-Kronrod 15-point abscissae on [-1, 1] (QUADPACK qk15), full node list
// with Kronrod weights and the embedded 7-point Gauss weights (0 off-rule).
struct Rule15 {
  std::array<double, 15> nodes{};
  std::array<double, 15> kronrod{};
  std::array<double, 15> gauss{};

  Rule15() {
    constexpr std::array<double, 8> xgk = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    constexpr std::array<double, 8> wgk = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    constexpr std::array<double, 4> wg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
    for (int j = 0; j < 7; ++j) {
      nodes[j] = -xgk[j];
      nodes[14 - j] = xgk[j];
      kronrod[j] = kronrod[14 - j] = wgk[j];
      const double g = (j % 2 == 1) ? wg[j / 2] : 0.0;
      gauss[j] = gauss[14 - j] = g;
    }
    nodes[7] = 0.0;
    kronrod[7] = wgk[7];
    gauss[7] = wg[3];
  }
};

const Rule15& rule() {
  static const Rule15 r;
  return r;
}

struct Region {
  Rect rect;
  double value;
  double error;
  double error_x;
  double error_y;
  std::uint64_t id;
};

struct WorseFirst {
  bool operator()(const Region& l, const Region& r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.id > r.id;
  }
};

constexpr std::size_t kNodes = 15 * 15;

Region evaluate(const BatchIntegrand& f, const Rect& rect, std::uint64_t id) {
  const Rule15& g = rule();
  const double cx = 0.5 * (rect.x0 + rect.x1), hx = 0.5 * (rect.x1 - rect.x0);
  const double cy = 0.5 * (rect.y0 + rect.y1), hy = 0.5 * (rect.y1 - rect.y0);
  std::array<double, kNodes> xs{}, ys{}, out{};
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = 0; j < 15; ++j) {
      xs[i * 15 + j] = cx + hx * g.nodes[i];
      ys[i * 15 + j] = cy + hy * g.nodes[j];
    }
  }
  f(xs, ys, out);

  double kk = 0.0, gg = 0.0, gk = 0.0, kg = 0.0;
  for (std::size_t i = 0; i < 15; ++i) {
    double row_k = 0.0, row_g = 0.0;
    for (std::size_t j = 0; j < 15; ++j) {
      const double value = out[i * 15 + j];
      if (!std::isfinite(value)) throw std::runtime_error("integrand returned a non-finite value");
      row_k += g.kronrod[j] * value;
      row_g += g.gauss[j] * value;
    }
    kk += g.kronrod[i] * row_k;
    kg += g.kronrod[i] * row_g;
    gk += g.gauss[i] * row_k;
    gg += g.gauss[i] * row_g;
  }
  const double area = hx * hy;
  Region region{rect, kk * area, std::fabs(kk - gg) * area, std::fabs(kk - gk) * area,
                std::fabs(kk - kg) * area, id};
  return region;
}

std::array<Rect, 2> bisect(const Region& region) {
  const Rect& r = region.rect;
  if (region.error_x >= region.error_y) {
    const double mid = 0.5 * (r.x0 + r.x1);
    return {Rect{r.x0, mid, r.y0, r.y1}, Rect{mid, r.x1, r.y0, r.y1}};
  }
  const double mid = 0.5 * (r.y0 + r.y1);
  return {Rect{r.x0, r.x1, r.y0, mid}, Rect{r.x0, r.x1, mid, r.y1}};
}

double pairwise_sum_impl(const double* data, std::size_t size) {
  if (size <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < size; ++i) s += data[i];
    return s;
  }
  const std::size_t half = size / 2;
  return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, size - half);
}

// Sums over the live regions in id order.
std::pair<double, double> exact_totals(std::vector<Region> live) {
  std::sort(live.begin(), live.end(), [](const Region& l, const Region& r) { return l.id < r.id; });
  std::vector<double> values, errors;
  values.reserve(live.size());
  errors.reserve(live.size());
  for (const auto& r : live) {
    values.push_back(r.value);
    errors.push_back(r.error);
  }
  return {pairwise_sum(values), pairwise_sum(errors)};
}

class RegionQueue : public std::priority_queue<Region, std::vector<Region>, WorseFirst> {
 public:
  const std::vector<Region>& items() const { return c; }
};

}  // namespace

double pairwise_sum(std::span<const double> values) { return pairwise_sum_impl(values.data(), values.size()); }

CubatureOutcome adaptive_cubature(const BatchIntegrand& f, std::span<const Rect> initial,
                                  const CubatureOptions& options) {
  if (initial.empty()) return CubatureOutcome{0.0, 0.0, 0, true};
  const unsigned workers = std::max(1u, options.workers);
  const std::size_t batch = workers == 1 ? 1 : 4 * static_cast<std::size_t>(workers);

  std::uint64_t next_id = 0;
  RegionQueue queue;
  double value = 0.0, error = 0.0;
  for (const Rect& r : initial) {
    Region region = evaluate(f, r, next_id++);
    value += region.value;
    error += region.error;
    queue.push(region);
  }

  auto tolerance = [&options](double v) { return std::max(options.abs_tol, options.rel_tol * std::fabs(v)); };

  std::vector<Region> popped;
  std::vector<Rect> child_rects;
  std::vector<Region> children;
  bool converged = false;
  for (;;) {
    if (error <= tolerance(value)) {
      const auto [v, e] = exact_totals(queue.items());
      value = v;
      error = e;
      if (error <= tolerance(value)) {
        converged = true;
        break;
      }
    }
    if (queue.size() + batch > options.max_regions) break;

    popped.clear();
    child_rects.clear();
    for (std::size_t i = 0; i < batch && !queue.empty(); ++i) {
      popped.push_back(queue.top());
      queue.pop();
      const auto halves = bisect(popped.back());
      child_rects.push_back(halves[0]);
      child_rects.push_back(halves[1]);
    }
    children.assign(child_rects.size(), Region{});
    const std::uint64_t base_id = next_id;
    next_id += child_rects.size();
    if (workers == 1 || child_rects.size() < 2) {
      for (std::size_t i = 0; i < child_rects.size(); ++i) children[i] = evaluate(f, child_rects[i], base_id + i);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t used = std::min<std::size_t>(workers, child_rects.size());
      for (std::size_t w = 0; w < used; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < child_rects.size(); i += used) {
            children[i] = evaluate(f, child_rects[i], base_id + i);
          }
        });
      }
    }
    for (const Region& p : popped) {
      value -= p.value;
      error -= p.error;
    }
    for (const Region& c : children) {
      value += c.value;
      error += c.error;
      queue.push(c);
    }
  }
  const auto [v, e] = exact_totals(queue.items());
  return CubatureOutcome{v, e, queue.size(), converged};
}

CubatureOutcome adaptive_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                                       double rel_tol, std::size_t max_intervals) {
  const Rule15& g = rule();
  struct Interval {
    double a, b, value, error;
    std::uint64_t id;
  };
  auto eval = [&](double lo, double hi, std::uint64_t id) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double k = 0.0, gs = 0.0;
    for (std::size_t i = 0; i < 15; ++i) {
      const double y = f(c + h * g.nodes[i]);
      if (!std::isfinite(y)) throw std::runtime_error("integrand returned a non-finite value");
      k += g.kronrod[i] * y;
      gs += g.gauss[i] * y;
    }
    return Interval{lo, hi, k * h, std::fabs(k - gs) * h, id};
  };
  auto worse = [](const Interval& l, const Interval& r) {
    if (l.error != r.error) return l.error < r.error;
    return l.id > r.id;
  };
  std::vector<Interval> heap{eval(a, b, 0)};
  std::uint64_t next_id = 1;
  auto totals = [&heap]() {
    auto sorted = heap;
    std::sort(sorted.begin(), sorted.end(), [](const Interval& l, const Interval& r) { return l.id < r.id; });
    std::vector<double> v, e;
    for (const auto& s : sorted) {
      v.push_back(s.value);
      e.push_back(s.error);
    }
    return std::pair{pairwise_sum(v), pairwise_sum(e)};
  };
  for (;;) {
    const auto [value, error] = totals();
    if (error <= rel_tol * std::fabs(value)) return CubatureOutcome{value, error, heap.size(), true};
    if (heap.size() >= max_intervals) return CubatureOutcome{value, error, heap.size(), false};
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Interval top = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (top.a + top.b);
    heap.push_back(eval(top.a, mid, next_id++));
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(eval(mid, top.b, next_id++));
    std::push_heap(heap.begin(), heap.end(), worse);
  }
}

}  // namespace duval

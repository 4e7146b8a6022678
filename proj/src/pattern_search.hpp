#ifndef TEMPCORR_SRC_PATTERN_SEARCH_HPP
#define TEMPCORR_SRC_PATTERN_SEARCH_HPP

#include <algorithm>
#include <limits>
#include <vector>

namespace tempcorr::detail {

struct Box {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

struct SearchSchedule {
  int max_evaluations;
  double initial_step;
  double shrink;
  double min_step;
};

// Compass search maximizing f over a box. Tries +/- step along each
// coordinate, takes the first improvement, and shrinks the step after a
// sweep without one. Deterministic for a given start.
template <class F>
double compass_maximize(F&& f, std::vector<double>& x, const std::vector<Box>& box, const SearchSchedule& sched) {
  double fx = f(x);
  double step = sched.initial_step;
  int evals = 1;
  std::vector<double> y;
  while (step > sched.min_step && evals < sched.max_evaluations) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size() && !improved; ++i) {
      for (double dir : {1.0, -1.0}) {
        y = x;
        y[i] = std::clamp(x[i] + dir * step, box[i].lo, box[i].hi);
        if (y[i] == x[i]) continue;
        const double fy = f(y);
        ++evals;
        if (fy > fx) {
          x.swap(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= sched.shrink;
  }
  return fx;
}

}  // namespace tempcorr::detail

#endif  // TEMPCORR_SRC_PATTERN_SEARCH_HPP

#include "dephasim/rate_fit.hpp"

#include <cmath>

#include "dephasim/errors.hpp"

namespace dephasim {

std::optional<RateFit> fit_exponential_rate(std::span<const double> times,
                                            std::span<const double> values, double t_lo,
                                            double t_hi, double floor) {
    if (times.size() != values.size())
        throw ArgumentError("fit_exponential_rate: times and values must have equal length");

    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        if (t < t_lo || t > t_hi) continue;
        const double v = values[i];
        if (!(v > floor)) continue;
        const double y = std::log(v);
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
        ++n;
    }
    if (n < 2) return std::nullopt;

    const double denom = n * stt - st * st;
    if (denom == 0.0) return std::nullopt;
    const double slope = (n * sty - st * sy) / denom;
    const double intercept = (sy - slope * st) / n;
    return RateFit{-slope, intercept, n};
}

} // namespace dephasim

#include "retailsim/harness/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace retailsim {

double t_critical(double confidence, double df)
{
    if (!(confidence > 0.0 && confidence < 1.0) || !(df > 0.0)) {
        throw std::invalid_argument("t_critical: need 0 < confidence < 1 and df > 0");
    }
    const boost::math::students_t dist(df);
    return boost::math::quantile(dist, 0.5 + confidence / 2.0);
}

Summary summarize(std::span<const double> xs, double confidence)
{
    Summary s;
    s.n = xs.size();
    if (s.n == 0) {
        return s;
    }
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    s.mean = sum / static_cast<double>(s.n);
    if (s.n < 2) {
        return s;
    }
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - s.mean) * (x - s.mean);
    }
    s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
    s.half_width = t_critical(confidence, static_cast<double>(s.n - 1)) * s.sd / std::sqrt(static_cast<double>(s.n));
    return s;
}

bool disjoint(const Summary& a, const Summary& b) noexcept
{
    return a.upper() < b.lower() || b.upper() < a.lower();
}

WelchResult welch_greater(std::span<const double> a, std::span<const double> b)
{
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("welch_greater: each sample needs at least two values");
    }
    const Summary sa = summarize(a);
    const Summary sb = summarize(b);
    const double va = sa.sd * sa.sd / static_cast<double>(sa.n);
    const double vb = sb.sd * sb.sd / static_cast<double>(sb.n);
    WelchResult r;
    const double diff = sa.mean - sb.mean;
    if (va + vb == 0.0) {
        r.t = diff > 0 ? INFINITY : (diff < 0 ? -INFINITY : 0.0);
        r.df = static_cast<double>(sa.n + sb.n - 2);
        r.p_one_sided = diff > 0 ? 0.0 : 1.0;
        return r;
    }
    r.t = diff / std::sqrt(va + vb);
    r.df = (va + vb) * (va + vb) /
           (va * va / static_cast<double>(sa.n - 1) + vb * vb / static_cast<double>(sb.n - 1));
    const boost::math::students_t dist(r.df);
    r.p_one_sided = boost::math::cdf(boost::math::complement(dist, r.t));
    return r;
}

} // namespace retailsim

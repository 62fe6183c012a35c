#include "stefan/delay_line.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stefan {

namespace {
std::string fmt_time(double t) {
    return std::to_string(t);
}
}  // namespace

DelayLine::DelayLine(double span) : span_(span) {
    if (!(span > 0.0) || !std::isfinite(span))
        throw std::invalid_argument("DelayLine: span must be positive");
}

DelayLine DelayLine::constant_history(double span, double t_end, double value, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("DelayLine: history dt must be positive");
    DelayLine line(span);
    const int n = std::max(1, static_cast<int>(std::ceil(span / dt - 1e-9)));
    const double h = span / n;
    for (int i = 0; i < n; ++i) line.append(t_end - span + i * h, value);
    return line;
}

void DelayLine::append(double t, double value) {
    if (!std::isfinite(t) || !std::isfinite(value))
        throw std::invalid_argument("DelayLine::append: non-finite sample");
    if (!t_.empty() && !(t > t_.back()))
        throw std::invalid_argument("DelayLine::append: timestamps must be strictly increasing");
    if (t_.empty()) {
        cum_.push_back(0.0);
    } else {
        cum_.push_back(cum_.back() + 0.5 * (t - t_.back()) * (value + v_.back()));
    }
    t_.push_back(t);
    v_.push_back(value);
}

double DelayLine::front_time() const {
    if (size() == 0) throw std::out_of_range("DelayLine: empty");
    return t_[head_];
}

double DelayLine::back_time() const {
    if (size() == 0) throw std::out_of_range("DelayLine: empty");
    return t_.back();
}

double DelayLine::back_value() const {
    if (size() == 0) throw std::out_of_range("DelayLine: empty");
    return v_.back();
}

double DelayLine::clamp_into_window(double t, const char* what) const {
    if (size() == 0) throw std::out_of_range("DelayLine: empty");
    const double slack = 1e-9 * std::max(1.0, span_);
    const double lo = t_[head_], hi = t_.back();
    if (t < lo - slack || t > hi + slack)
        throw std::out_of_range(std::string("DelayLine: ") + what + " at t=" + fmt_time(t) +
                                " outside retained window [" + fmt_time(lo) + ", " + fmt_time(hi) + "]");
    return std::min(std::max(t, lo), hi);
}

std::size_t DelayLine::floor_index(double t) const {
    // Last index i with t_[i] <= t.
    auto it = std::upper_bound(t_.begin() + static_cast<std::ptrdiff_t>(head_), t_.end(), t);
    return static_cast<std::size_t>(it - t_.begin()) - 1;
}

double DelayLine::lookup(double t) const {
    t = clamp_into_window(t, "lookup");
    const std::size_t i = floor_index(t);
    if (i + 1 >= t_.size()) return v_.back();
    const double w = (t - t_[i]) / (t_[i + 1] - t_[i]);
    return v_[i] + w * (v_[i + 1] - v_[i]);
}

double DelayLine::integral_from_front(double x) const {
    const std::size_t i = floor_index(x);
    double acc = cum_[i] - cum_[head_];
    if (i + 1 < t_.size() && x > t_[i]) {
        const double w = (x - t_[i]) / (t_[i + 1] - t_[i]);
        const double vx = v_[i] + w * (v_[i + 1] - v_[i]);
        acc += 0.5 * (x - t_[i]) * (v_[i] + vx);
    }
    return acc;
}

double DelayLine::integral(double a, double b) const {
    if (b < a) return -integral(b, a);
    a = clamp_into_window(a, "integral endpoint");
    b = clamp_into_window(b, "integral endpoint");
    return integral_from_front(b) - integral_from_front(a);
}

void DelayLine::prune(double keep_from) {
    if (size() == 0) return;
    auto it = std::lower_bound(t_.begin() + static_cast<std::ptrdiff_t>(head_), t_.end(), keep_from);
    std::size_t i = static_cast<std::size_t>(it - t_.begin());
    if (i < t_.size() && t_[i] == keep_from) {
        head_ = std::max(head_, i);
    } else if (i > head_) {
        head_ = i - 1;
    }
    if (head_ > 1024 && head_ > t_.size() / 2) compact();
}

void DelayLine::compact() {
    t_.erase(t_.begin(), t_.begin() + static_cast<std::ptrdiff_t>(head_));
    v_.erase(v_.begin(), v_.begin() + static_cast<std::ptrdiff_t>(head_));
    cum_.erase(cum_.begin(), cum_.begin() + static_cast<std::ptrdiff_t>(head_));
    head_ = 0;
}

}  // namespace stefan

#pragma once

#include <cstddef>
#include <vector>

namespace stefan {

// Time-stamped record of the commanded boundary flux, kept long enough to answer
// delayed lookups and moving-window integrals. Samples are piecewise linear in
// time; lookup() interpolates and integral() is exact for that interpolant.
class DelayLine {
  public:
    // span is the minimum history length the line promises to retain [s].
    explicit DelayLine(double span);

    // Uniform constant history at `value` covering [t_end - span, t_end), with grid
    // spacing <= dt; the sample at t_end itself is left to the first live commitment.
    static DelayLine constant_history(double span, double t_end, double value, double dt);

    // Appends a sample; t must be strictly greater than back_time().
    void append(double t, double value);

    double front_time() const;
    double back_time() const;
    double back_value() const;
    std::size_t size() const { return t_.size() - head_; }
    double span() const { return span_; }

    // Linear interpolation of the stored signal; throws std::out_of_range when t is
    // outside the retained window (beyond a small absolute slack).
    double lookup(double t) const;

    // Signed integral of the stored signal from a to b (negative when b < a); exact
    // for the piecewise-linear interpolant. Both endpoints must lie in the window.
    double integral(double a, double b) const;

    // Drops samples no longer needed for lookups at or after keep_from, always
    // retaining one sample at or before it.
    void prune(double keep_from);

  private:
    double span_;
    std::size_t head_ = 0;
    std::vector<double> t_, v_, cum_;

    double clamp_into_window(double t, const char* what) const;
    double integral_from_front(double x) const;
    std::size_t floor_index(double t) const;
    void compact();
};

}  // namespace stefan

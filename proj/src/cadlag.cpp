#include "levyou/cadlag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace levyou {

CadlagPath::CadlagPath(std::vector<Breakpoint> breakpoints, Interp interp, double horizon)
    : points_(std::move(breakpoints)), interp_(interp), horizon_(horizon) {
    if (points_.empty()) throw std::invalid_argument("cadlag: at least one breakpoint required");
    if (!(horizon_ > 0.0)) throw std::invalid_argument("cadlag: horizon must be > 0");
    if (points_.front().t != 0.0) throw std::invalid_argument("cadlag: first breakpoint must be t=0");
    if (points_.front().left != points_.front().right) {
        throw std::invalid_argument("cadlag: no left limit before t=0");
    }
    double prev = -1.0;
    for (const auto& bp : points_) {
        if (!(bp.t > prev)) throw std::invalid_argument("cadlag: times must be strictly increasing");
        if (!(bp.t <= horizon_)) throw std::invalid_argument("cadlag: breakpoint beyond horizon");
        if (!std::isfinite(bp.left) || !std::isfinite(bp.right)) {
            throw std::invalid_argument("cadlag: non-finite value");
        }
        prev = bp.t;
    }
}

CadlagPath CadlagPath::step_path(const std::vector<double>& times,
                                 const std::vector<double>& values, double horizon) {
    if (times.size() != values.size() || times.empty()) {
        throw std::invalid_argument("step_path: need matching non-empty times/values");
    }
    std::vector<Breakpoint> bps;
    bps.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double left = i == 0 ? values[0] : values[i - 1];
        bps.push_back({times[i], left, values[i]});
    }
    return CadlagPath(std::move(bps), Interp::step, horizon);
}

CadlagPath CadlagPath::linear_path(const std::vector<double>& times,
                                   const std::vector<double>& values, double horizon) {
    if (times.size() != values.size() || times.empty()) {
        throw std::invalid_argument("linear_path: need matching non-empty times/values");
    }
    std::vector<Breakpoint> bps;
    bps.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        bps.push_back({times[i], values[i], values[i]});
    }
    return CadlagPath(std::move(bps), Interp::linear, horizon);
}

namespace {

// Index of the last breakpoint with time <= t.
std::size_t locate(const std::vector<Breakpoint>& pts, double t) {
    auto it = std::upper_bound(pts.begin(), pts.end(), t,
                               [](double v, const Breakpoint& b) { return v < b.t; });
    if (it == pts.begin()) throw std::invalid_argument("cadlag: evaluation before t=0");
    return static_cast<std::size_t>(it - pts.begin()) - 1;
}

}  // namespace

double CadlagPath::value(double t) const {
    if (t < 0.0 || t > horizon_) throw std::invalid_argument("cadlag: t outside [0,T]");
    const std::size_t i = locate(points_, t);
    const auto& bp = points_[i];
    if (t == bp.t || interp_ == Interp::step || i + 1 == points_.size()) return bp.right;
    const auto& next = points_[i + 1];
    const double w = (t - bp.t) / (next.t - bp.t);
    return bp.right + w * (next.left - bp.right);
}

double CadlagPath::left_limit(double t) const {
    if (t < 0.0 || t > horizon_) throw std::invalid_argument("cadlag: t outside [0,T]");
    if (t == 0.0) return points_.front().left;
    const std::size_t i = locate(points_, t);
    const auto& bp = points_[i];
    if (t == bp.t) return bp.left;
    if (interp_ == Interp::step || i + 1 == points_.size()) return bp.right;
    const auto& next = points_[i + 1];
    const double w = (t - bp.t) / (next.t - bp.t);
    return bp.right + w * (next.left - bp.right);
}

CadlagPath CadlagPath::restrict(double T) const {
    if (!(T > 0.0 && T <= horizon_)) throw std::invalid_argument("restrict: need 0 < T <= horizon");
    std::vector<Breakpoint> bps;
    for (const auto& bp : points_) {
        if (bp.t <= T) bps.push_back(bp);
    }
    const bool cut = bps.size() < points_.size();
    if (cut && interp_ == Interp::linear && bps.back().t < T) {
        // T lands inside a linear segment; pin the value there.
        const double v = value(T);
        bps.push_back({T, v, v});
    }
    return CadlagPath(std::move(bps), interp_, T);
}

std::vector<GraphVertex> completed_graph(const CadlagPath& p) {
    const auto& pts = p.breakpoints();
    std::vector<GraphVertex> verts;
    verts.reserve(2 * pts.size() + 1);
    auto push = [&verts](double z, double t) {
        if (!verts.empty() && verts.back().z == z && verts.back().t == t) return;
        verts.push_back({z, t});
    };
    push(pts.front().right, 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto& bp = pts[i];
        if (p.interpolation() == Interp::step) {
            // value holds at pts[i-1].right until t, then moves vertically
            push(pts[i - 1].right, bp.t);
            push(bp.left, bp.t);
        } else {
            push(bp.left, bp.t);  // arrival along the linear segment
        }
        push(bp.right, bp.t);
    }
    if (pts.back().t < p.horizon()) push(pts.back().right, p.horizon());
    return verts;
}

CadlagPath path_from_grid(const std::vector<double>& times, const std::vector<double>& values,
                          GridPathMode mode, double horizon, double jump_threshold_multiple) {
    if (mode == GridPathMode::step) return CadlagPath::step_path(times, values, horizon);
    if (mode == GridPathMode::linear) return CadlagPath::linear_path(times, values, horizon);
    if (times.size() != values.size() || times.empty()) {
        throw std::invalid_argument("path_from_grid: need matching non-empty times/values");
    }
    std::vector<double> mags;
    mags.reserve(values.size());
    for (std::size_t i = 1; i < values.size(); ++i) {
        mags.push_back(std::abs(values[i] - values[i - 1]));
    }
    double scale = 0.0;
    if (!mags.empty()) {
        std::vector<double> tmp = mags;
        auto mid = tmp.begin() + tmp.size() / 2;
        std::nth_element(tmp.begin(), mid, tmp.end());
        scale = *mid;
    }
    const double cutoff = jump_threshold_multiple * scale;
    std::vector<Breakpoint> bps;
    bps.reserve(times.size());
    bps.push_back({times[0], values[0], values[0]});
    for (std::size_t i = 1; i < times.size(); ++i) {
        const bool jump = scale > 0.0 && mags[i - 1] > cutoff;
        bps.push_back({times[i], jump ? values[i - 1] : values[i], values[i]});
    }
    return CadlagPath(std::move(bps), Interp::linear, horizon);
}

void write_path_csv(std::ostream& os, const CadlagPath& p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "# horizon=%.17g interpolation=%s\n", p.horizon(),
                  p.interpolation() == Interp::step ? "step" : "linear");
    os << buf << "t,left,right,kind\n";
    for (const auto& bp : p.breakpoints()) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s\n", bp.t, bp.left, bp.right,
                      bp.is_jump() ? "jump" : "node");
        os << buf;
    }
}

CadlagPath read_path_csv(std::istream& is) {
    std::string line;
    double horizon = 0.0;
    Interp interp = Interp::linear;
    bool have_preamble = false;
    std::vector<Breakpoint> bps;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            char tag[16] = {0};
            if (std::sscanf(line.c_str(), "# horizon=%lg interpolation=%15s", &horizon, tag) == 2) {
                interp = std::string(tag) == "step" ? Interp::step : Interp::linear;
                have_preamble = true;
            }
            continue;
        }
        if (line.rfind("t,", 0) == 0) continue;  // header
        double t, l, r;
        char kind[16] = {0};
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%15s", &t, &l, &r, kind) != 4) {
            throw std::runtime_error("path csv: malformed row: " + line);
        }
        bps.push_back({t, l, r});
    }
    if (!have_preamble) throw std::runtime_error("path csv: missing preamble comment");
    return CadlagPath(std::move(bps), interp, horizon);
}

void write_path_csv_file(const std::string& filename, const CadlagPath& p) {
    std::ofstream os(filename);
    if (!os) throw std::runtime_error("cannot open for writing: " + filename);
    write_path_csv(os, p);
    if (!os) throw std::runtime_error("write failed: " + filename);
}

CadlagPath read_path_csv_file(const std::string& filename) {
    std::ifstream is(filename);
    if (!is) throw std::runtime_error("cannot open for reading: " + filename);
    return read_path_csv(is);
}

}  // namespace levyou

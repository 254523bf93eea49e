#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levyou {

enum class Interp { step, linear };

struct Breakpoint {
    double t;
    double left;   // left limit at t
    double right;  // value at t (cadlag)
    bool is_jump() const { return left != right; }
};

// Finite representation of a cadlag path on [0,T]: ordered breakpoints with
// left/right values, constant or linear interpolation between them, constant
// extension after the last breakpoint. Left limits are stored, not
// reconstructed.
class CadlagPath {
  public:
    CadlagPath(std::vector<Breakpoint> breakpoints, Interp interp, double horizon);

    // Constant-between-nodes path through (times[i], values[i]); jumps at
    // every node where the value changes.
    static CadlagPath step_path(const std::vector<double>& times,
                                const std::vector<double>& values, double horizon);
    // Continuous piecewise-linear path through the nodes.
    static CadlagPath linear_path(const std::vector<double>& times,
                                  const std::vector<double>& values, double horizon);

    double value(double t) const;       // p_t, right-continuous
    double left_limit(double t) const;  // p_{t-} (= p_0 at t = 0)

    const std::vector<Breakpoint>& breakpoints() const { return points_; }
    Interp interpolation() const { return interp_; }
    double horizon() const { return horizon_; }

    // Path restricted to [0,T], T <= horizon; inserts an interpolated node at
    // T when needed.
    CadlagPath restrict(double T) const;

  private:
    std::vector<Breakpoint> points_;
    Interp interp_;
    double horizon_;
};

// Vertex of the completed graph, in graph order: time coordinates
// nondecreasing, vertical segments at jumps.
struct GraphVertex {
    double z;
    double t;
};

std::vector<GraphVertex> completed_graph(const CadlagPath& p);

// Converts a raw sampled series to a path. mode "auto" flags increment i as a
// jump when |v_i - v_{i-1}| exceeds jump_threshold_multiple times the median
// absolute increment (the local continuous-scale estimate) and interpolates
// linearly elsewhere.
enum class GridPathMode { step, linear, auto_detect };
CadlagPath path_from_grid(const std::vector<double>& times, const std::vector<double>& values,
                          GridPathMode mode, double horizon,
                          double jump_threshold_multiple = 8.0);

// CSV serialization: one-line preamble comment with horizon and interpolation
// tag, then `t,left,right,kind` rows with kind in {node,jump}.
void write_path_csv(std::ostream& os, const CadlagPath& p);
CadlagPath read_path_csv(std::istream& is);
void write_path_csv_file(const std::string& filename, const CadlagPath& p);
CadlagPath read_path_csv_file(const std::string& filename);

}  // namespace levyou

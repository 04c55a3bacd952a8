#ifndef FLOER_MASLOV_HPP
#define FLOER_MASLOV_HPP

#include <vector>

#include "floer/rational.hpp"

namespace floer {

// Unoriented line through the origin with primitive integer direction,
// normalized so that its angle theta0 lies in [0, pi): b > 0, or b == 0 and a > 0.
struct Direction {
    Int a = 1, b = 0;
    bool operator==(const Direction& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Direction& o) const { return !(*this == o); }
};

Direction canonical_direction(Int a, Int b);
// theta0(d1) < theta0(d2)
bool angle_less(const Direction& d1, const Direction& d2);

// theta0(dir) + turns * pi
struct AngleLift {
    Direction dir;
    Int turns = 0;
    bool operator==(const AngleLift& o) const { return dir == o.dir && turns == o.turns; }
    bool operator<(const AngleLift& o) const;
    AngleLift plus_pi(Int k) const { return {dir, turns + k}; }
};

// q * pi / 4
AngleLift quarter_pi(Int q);

struct Breakpoint {
    Rational t;
    AngleLift theta;
};

class AnglePath {
public:
    explicit AnglePath(std::vector<Breakpoint> pts);
    static AnglePath constant(const AngleLift& th);
    static AnglePath linear(const AngleLift& from, const AngleLift& to);

    const std::vector<Breakpoint>& breakpoints() const { return pts_; }
    const AngleLift& start() const { return pts_.front().theta; }
    const AngleLift& end() const { return pts_.back().theta; }
    AnglePath reversed() const;
    // shift every lift by k * pi
    AnglePath shifted(Int k) const;

private:
    std::vector<Breakpoint> pts_;
};

struct LagLoopPlan {
    std::vector<AnglePath> segments;
    std::vector<Int> lift_jumps;  // turns(start of i+1) - turns(end of i), cyclically
};

// Validates cyclic matching mod pi and records lift jumps.
LagLoopPlan make_loop(std::vector<AnglePath> segments);
Int maslov_loop(const LagLoopPlan& loop);

// Linear path from theta0 to theta0 + delta, delta in (0,pi), ending on target mod pi.
AnglePath short_positive_path(const AngleLift& theta0, const Direction& target);

// Four-sided loop: corner path at p from L0 to L1, boundary1 reversed,
// lambda01 reversed, boundary0.
Int maslov_morse(const AnglePath& lambda01, const AnglePath& boundary0, const AnglePath& boundary1,
                 const Direction& theta_L0_at_p, const Direction& theta_L1_at_p);

struct CornerAngles {
    Direction in;   // tangent direction of the arc arriving at the corner
    Direction out;  // tangent direction of the arc leaving the corner
};

// boundary_paths[i] ends on corners[i].in; boundary_paths[i+1] starts on corners[i].out.
Int polygonal_index(const std::vector<CornerAngles>& corners, const std::vector<AnglePath>& boundary_paths);

}  // namespace floer

#endif

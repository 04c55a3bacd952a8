#include "floer/maslov.hpp"

#include <numeric>

namespace floer {

Direction canonical_direction(Int a, Int b) {
    if (a == 0 && b == 0) throw Error(ErrorKind::input, "zero direction");
    Int g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

bool angle_less(const Direction& d1, const Direction& d2) {
    // both angles lie in [0,pi) so the cross product decides
    return d1.a * d2.b - d1.b * d2.a > 0;
}

bool AngleLift::operator<(const AngleLift& o) const {
    if (turns != o.turns) return turns < o.turns;
    return angle_less(dir, o.dir);
}

AngleLift quarter_pi(Int q) {
    static const Direction dirs[4] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}};
    Int r = ((q % 4) + 4) % 4;
    return {dirs[r], (q - r) / 4};
}

AnglePath::AnglePath(std::vector<Breakpoint> pts) : pts_(std::move(pts)) {
    if (pts_.size() < 2) throw Error(ErrorKind::input, "angle path needs two breakpoints");
    if (pts_.front().t != 0 || pts_.back().t != 1)
        throw Error(ErrorKind::input, "angle path must run over [0,1]");
    for (std::size_t i = 1; i < pts_.size(); ++i)
        if (!(pts_[i - 1].t < pts_[i].t)) throw Error(ErrorKind::input, "breakpoints must increase");
}

AnglePath AnglePath::constant(const AngleLift& th) { return AnglePath({{0, th}, {1, th}}); }

AnglePath AnglePath::linear(const AngleLift& from, const AngleLift& to) {
    return AnglePath({{0, from}, {1, to}});
}

AnglePath AnglePath::reversed() const {
    std::vector<Breakpoint> r;
    for (auto it = pts_.rbegin(); it != pts_.rend(); ++it) r.push_back({1 - it->t, it->theta});
    return AnglePath(std::move(r));
}

AnglePath AnglePath::shifted(Int k) const {
    std::vector<Breakpoint> r = pts_;
    for (auto& b : r) b.theta.turns += k;
    return AnglePath(std::move(r));
}

LagLoopPlan make_loop(std::vector<AnglePath> segments) {
    if (segments.empty()) throw Error(ErrorKind::non_loop, "empty loop");
    LagLoopPlan plan;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const AngleLift& e = segments[i].end();
        const AngleLift& s = segments[(i + 1) % segments.size()].start();
        if (e.dir != s.dir)
            throw Error(ErrorKind::non_loop, "segment " + std::to_string(i) + " does not close up mod pi");
        plan.lift_jumps.push_back(s.turns - e.turns);
    }
    plan.segments = std::move(segments);
    return plan;
}

Int maslov_loop(const LagLoopPlan& loop) {
    // the theta0 parts telescope because junction directions agree
    Int w = 0;
    for (std::size_t i = 0; i < loop.segments.size(); ++i) {
        const auto& seg = loop.segments[i];
        w += seg.end().turns - seg.start().turns;
        const auto& nxt = loop.segments[(i + 1) % loop.segments.size()];
        if (seg.end().dir != nxt.start().dir) throw Error(ErrorKind::non_loop, "junction mismatch");
    }
    return w;
}

AnglePath short_positive_path(const AngleLift& theta0, const Direction& target) {
    if (theta0.dir == target) throw Error(ErrorKind::non_transverse, "endpoints agree mod pi");
    AngleLift end{target, angle_less(theta0.dir, target) ? theta0.turns : theta0.turns + 1};
    return AnglePath::linear(theta0, end);
}

Int maslov_morse(const AnglePath& lambda01, const AnglePath& boundary0, const AnglePath& boundary1,
                 const Direction& theta_L0_at_p, const Direction& theta_L1_at_p) {
    if (boundary0.end().dir != theta_L0_at_p || boundary1.end().dir != theta_L1_at_p)
        throw Error(ErrorKind::non_loop, "boundary paths do not end on the tangent lines at p");
    if (lambda01.start().dir != boundary0.start().dir || lambda01.end().dir != boundary1.start().dir)
        throw Error(ErrorKind::non_loop, "base path does not match boundary paths");
    AnglePath corner = short_positive_path(boundary0.end(), theta_L1_at_p);
    return maslov_loop(make_loop({corner, boundary1.reversed(), lambda01.reversed(), boundary0}));
}

Int polygonal_index(const std::vector<CornerAngles>& corners, const std::vector<AnglePath>& boundary_paths) {
    std::size_t n = corners.size();
    if (n < 2 || boundary_paths.size() != n)
        throw Error(ErrorKind::input, "polygon needs matching corners and boundary paths");
    std::vector<AnglePath> segs;
    for (std::size_t i = 0; i < n; ++i) {
        const AnglePath& bp = boundary_paths[i];
        if (bp.end().dir != corners[i].in)
            throw Error(ErrorKind::non_loop, "boundary path " + std::to_string(i) + " misses corner");
        if (boundary_paths[(i + 1) % n].start().dir != corners[i].out)
            throw Error(ErrorKind::non_loop, "corner " + std::to_string(i) + " misses next boundary path");
        segs.push_back(bp);
        AnglePath up = short_positive_path(AngleLift{corners[i].out, 0}, corners[i].in);
        segs.push_back(up.reversed());
    }
    return maslov_loop(make_loop(std::move(segs)));
}

}  // namespace floer

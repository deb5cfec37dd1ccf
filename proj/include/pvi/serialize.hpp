#pragma once

// JSON / CSV serialization. Complex numbers are always re/im pairs; CSV never
// prints complex literals.

#include <iomanip>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "pvi/fuchsian.hpp"
#include "pvi/monodromy_numeric.hpp"
#include "pvi/pvi.hpp"
#include "pvi/rep.hpp"

namespace pvi {

using json = nlohmann::json;

inline json to_json(cx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json to_json(const Mat2& m) {
    return json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}, {"d", to_json(m.d)}};
}

inline json to_json(const ThetaTuple& t) {
    return json{{"theta0", to_json(t.theta0)},
                {"thetax", to_json(t.thetax)},
                {"theta1", to_json(t.theta1)},
                {"thetainf", to_json(t.thetainf)}};
}

inline json to_json(const FuchsianSystem& s) {
    return json{{"a0", to_json(s.a0)},
                {"ax", to_json(s.ax)},
                {"a1", to_json(s.a1)},
                {"x", to_json(s.x)},
                {"k0", to_json(s.k0)}};
}

inline json to_json(const MonodromyRep& r) {
    return json{{"m0", to_json(r.m0)}, {"mx", to_json(r.mx)}, {"m1", to_json(r.m1)}};
}

inline json to_json(const TraceTriple& tt) {
    return json{{"t0x", to_json(tt.t0x)}, {"t01", to_json(tt.t01)}, {"t1x", to_json(tt.t1x)}};
}

inline json to_json(const LoopBasis& b) {
    auto loop = [](const std::vector<cx>& pts) {
        json arr = json::array();
        for (cx p : pts) arr.push_back(to_json(p));
        return arr;
    };
    return json{{"basepoint", to_json(b.basepoint)},
                {"loop0", loop(b.loop0)},
                {"loopx", loop(b.loopx)},
                {"loop1", loop(b.loop1)}};
}

inline json to_json(const Trajectory& tr) {
    json rows = json::array();
    for (const auto& p : tr) {
        rows.push_back(json{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"yp", to_json(p.yp)}});
    }
    return rows;
}

inline std::string trajectory_to_csv(const Trajectory& tr) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "re_x,im_x,re_y,im_y,re_yp,im_yp\n";
    for (const auto& p : tr) {
        os << p.x.real() << ',' << p.x.imag() << ',' << p.y.real() << ',' << p.y.imag() << ','
           << p.yp.real() << ',' << p.yp.imag() << '\n';
    }
    return os.str();
}

inline Trajectory trajectory_from_json(const json& rows) {
    Trajectory tr;
    auto get = [](const json& j) { return cx(j.at("re").get<double>(), j.at("im").get<double>()); };
    for (const auto& row : rows) tr.push_back({get(row.at("x")), get(row.at("y")), get(row.at("yp"))});
    return tr;
}

}  // namespace pvi

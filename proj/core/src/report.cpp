#include "lgt/report.hpp"

#include <cmath>

#include <json.hpp>

namespace lgt {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::quadrature: return "quadrature";
        case Method::monte_carlo: return "monte-carlo";
        case Method::enumeration: return "enumeration";
    }
    return "unknown";
}

namespace {

using nlohmann::json;

json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

json estimate(const Estimate& e) {
    return {{"value", number(e.value)},
            {"stderr", number(e.std_error)},
            {"n", e.n},
            {"method", std::string(to_string(e.method))}};
}

}  // namespace

std::string to_json(const Estimate& e) { return estimate(e).dump(); }

std::string to_json(const IdentityReport& r) {
    json meta = json::object();
    for (const auto& [key, value] : r.meta) {
        std::visit(
            [&](const auto& v) {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>) {
                    meta[key] = number(v);
                } else {
                    meta[key] = v;
                }
            },
            value);
    }
    const json j = {{"name", r.name},         {"lhs", estimate(r.lhs)},
                    {"rhs", estimate(r.rhs)}, {"abs_diff", number(r.abs_diff)},
                    {"gate", number(r.gate)}, {"passed", r.passed},
                    {"gated", r.gated},       {"meta", meta}};
    return j.dump();
}

std::string to_json(const IndependenceResult& r) {
    json j = {{"side", r.side},
              {"mesh_divisor", r.mesh_divisor},
              {"mesh", r.mesh},
              {"cells", r.cells},
              {"n", r.n},
              {"seed", r.seed},
              {"histogram", r.histogram},
              {"p1", estimate(r.p1)},
              {"p2", estimate(r.p2)},
              {"p3", estimate(r.p3)},
              {"p12", estimate(r.p12)},
              {"p13", estimate(r.p13)},
              {"p23", estimate(r.p23)},
              {"p123", estimate(r.p123)},
              {"triple_defect", estimate(r.triple_defect)},
              {"pairwise_defects",
               {estimate(r.pairwise_defects[0]), estimate(r.pairwise_defects[1]),
                estimate(r.pairwise_defects[2])}}};
    return j.dump();
}

void write_csv(std::ostream& out, std::span<const IndependenceResult> results) {
    out << "side,mesh_divisor,mesh,cells,n,seed";
    for (const char* name : {"p1", "p2", "p3", "p12", "p13", "p23", "p123", "triple_defect",
                             "defect12", "defect13", "defect23"}) {
        out << ',' << name << ',' << name << "_stderr";
    }
    out << '\n';
    const auto old_precision = out.precision(17);
    for (const auto& r : results) {
        out << r.side << ',' << r.mesh_divisor << ',' << r.mesh << ',' << r.cells << ',' << r.n
            << ',' << r.seed;
        for (const Estimate* e : {&r.p1, &r.p2, &r.p3, &r.p12, &r.p13, &r.p23, &r.p123,
                                  &r.triple_defect, &r.pairwise_defects[0], &r.pairwise_defects[1],
                                  &r.pairwise_defects[2]}) {
            out << ',' << e->value << ',' << e->std_error;
        }
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace lgt

#include "lgt/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <random>

#include "lgt/error.hpp"

namespace lgt {

void IdentityReport::set(std::string key, MetaValue value) {
    for (auto& [k, v] : meta) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    meta.emplace_back(std::move(key), std::move(value));
}

void IdentityReport::decide() {
    abs_diff = std::abs(lhs.value - rhs.value);
    passed = gated ? abs_diff <= gate : true;
}

namespace {

constexpr int symmetry_trials = 100;
constexpr std::uint64_t assertion_seed = 0x5eed;

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

void describe(IdentityReport& r, const TriangulatedPolygon& polygon) {
    r.set("complex", polygon.summary());
}

void describe(IdentityReport& r, const MonteCarloOptions& o) {
    r.set("samples", static_cast<std::int64_t>(o.samples));
    r.set("seed", static_cast<std::int64_t>(o.seed));
    r.set("workers", static_cast<std::int64_t>(o.workers));
}

void describe(IdentityReport& r, const QuadratureOptions& o) {
    r.set("grid", static_cast<std::int64_t>(o.grid));
    r.set("measure", std::string(o.measure == Measure::haar ? "haar" : "lebesgue"));
}

IdentityReport exact_report(std::string name, Estimate lhs, Estimate rhs) {
    IdentityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.gate = exact_gate;
    r.decide();
    return r;
}

std::vector<double> random_angles(std::size_t n, Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<double> theta(n);
    for (double& t : theta) t = angle(rng);
    return theta;
}

void require_reflection_symmetric(const U1Observable& f, std::size_t n_edges) {
    Rng rng = substream(assertion_seed, 1);
    for (int trial = 0; trial < symmetry_trials; ++trial) {
        std::vector<double> theta = random_angles(n_edges, rng);
        const double base = f(U1Angles(theta).point());
        for (std::size_t s = 0; s < n_edges; ++s) {
            const double original = theta[s];
            for (double reflected : {std::numbers::pi - original, std::numbers::pi + original}) {
                theta[s] = reflected;
                if (!close(base, f(U1Angles(theta).point()))) {
                    fail(ErrorKind::invalid_observable,
                         "observable is not invariant under theta -> pi +- theta on edge slot " +
                             std::to_string(s));
                }
            }
            theta[s] = original;
        }
    }
}

// Negates each coordinate of each nonboundary link in turn.
void require_coordinate_symmetric(const TriangulatedPolygon& polygon, const BoundaryCondition& bc,
                                  const FieldFunction& f, LinkSampler sampler) {
    Rng rng = substream(assertion_seed, 2);
    GaugeField field(polygon, bc);
    const int first = sampler == LinkSampler::imaginary ? 1 : 0;
    for (int trial = 0; trial < symmetry_trials; ++trial) {
        sample_links(polygon, field, sampler, rng);
        const double base = f(field);
        for (std::size_t s = 0; s < polygon.interior_edges().size(); ++s) {
            const int e = polygon.interior_edges()[s];
            const AlgebraElement original = field[e];
            for (int k = first; k < original.dimension(); ++k) {
                AlgebraElement flipped = original;
                flipped[k] = -flipped[k];
                field.set_interior(polygon, static_cast<int>(s), flipped);
                if (!close(base, f(field))) {
                    fail(ErrorKind::invalid_observable,
                         "observable is not invariant under negating coordinate " +
                             std::to_string(k) + " of edge slot " + std::to_string(s));
                }
            }
            field.set_interior(polygon, static_cast<int>(s), original);
        }
    }
}

// Paired comparison of mean(f w_lhs) and mean(f w_rhs) on one stream.
IdentityReport paired_linearization(std::string name, const TriangulatedPolygon& polygon,
                                    const BoundaryCondition& bc, const FieldFunction& f,
                                    const FieldFunction& w_lhs, const FieldFunction& w_rhs,
                                    LinkSampler sampler, const MonteCarloOptions& options) {
    const GaugeField base(polygon, bc);
    const SampleFactory factory = [&]() -> SampleFunction {
        auto field = std::make_shared<GaugeField>(base);
        return [&, field](Rng& rng, std::span<double> out) {
            sample_links(polygon, *field, sampler, rng);
            const double v = f(*field);
            out[0] = v * w_lhs(*field);
            out[1] = v * w_rhs(*field);
        };
    };
    const Moments m = mc_moments(factory, 2, options);
    IdentityReport r;
    r.name = std::move(name);
    r.lhs = m.estimate(0);
    r.rhs = m.estimate(1);
    const Estimate diff = m.difference(0, 1);
    r.gate = mc_gate_sigmas * diff.std_error;
    r.set("diff_stderr", diff.std_error);
    r.decide();
    describe(r, polygon);
    describe(r, options);
    return r;
}

AlgebraElement random_group_element(AlgebraKind kind, Rng& rng) {
    SphereSampler sphere;
    return sphere.unit(kind, rng);
}

}  // namespace

// ---------------------------------------------------------------------------
// Observables

U1Observable u1_constant(double c) {
    return [c](const U1Point&) { return c; };
}

U1Observable u1_product_cos2() {
    return [](const U1Point& p) {
        double v = 1.0;
        for (double c : p.cos) v *= c * c;
        return v;
    };
}

U1Observable u1_sum_sin2() {
    return [](const U1Point& p) {
        double v = 0.0;
        for (double s : p.sin) v += s * s;
        return v;
    };
}

U1Observable u1_pair_cos2_sin2() {
    return [](const U1Point& p) {
        double v = 0.0;
        const std::size_t n = p.cos.size();
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) v += p.cos[a] * p.cos[a] * p.sin[b] * p.sin[b];
        }
        return v;
    };
}

U1Observable u1_cos_first() {
    return [](const U1Point& p) { return p.cos.empty() ? 0.0 : p.cos[0]; };
}

FieldFunction field_constant(double c) {
    return [c](const GaugeField&) { return c; };
}

FieldFunction field_product_re2(const TriangulatedPolygon& polygon) {
    return [&polygon](const GaugeField& U) {
        double v = 1.0;
        for (int e : polygon.interior_edges()) v *= U[e].re() * U[e].re();
        return v;
    };
}

FieldFunction field_sum_coord2(const TriangulatedPolygon& polygon) {
    return [&polygon](const GaugeField& U) {
        double v = 0.0;
        for (int e : polygon.interior_edges()) {
            const auto c = U[e].coords();
            v += c.back() * c.back();
        }
        return v;
    };
}

HiggsObservable higgs_plaquette_product(const TriangulatedPolygon& polygon) {
    return [&polygon](const GaugeField& U, const HiggsField&) {
        double v = 1.0;
        for (std::size_t f = 0; f < polygon.faces().size(); ++f) {
            v *= 1.0 + face_holonomy_re(polygon, U, static_cast<int>(f));
        }
        return v;
    };
}

HiggsObservable higgs_link_re2_sum(const TriangulatedPolygon& polygon) {
    return [&polygon](const GaugeField& U, const HiggsField& H) {
        double v = 0.0;
        for (int e : polygon.interior_edges()) {
            const double c = link_coupling_re(polygon, U, H, e);
            v += c * c;
        }
        return v;
    };
}

HiggsObservable higgs_constant(double c) {
    return [c](const GaugeField&, const HiggsField&) { return c; };
}

HiggsObservable higgs_hexagon_fprime(const TriangulatedPolygon& polygon) {
    const HexagonLabels labels = hexagon_labels(polygon);
    return [labels](const GaugeField& U, const HiggsField& H) {
        if (U.kind() != AlgebraKind::complex) {
            fail(ErrorKind::invalid_argument, "hexagon f' is defined for U(1) fields");
        }
        std::array<double, 6> theta{};
        for (std::size_t n = 0; n < 6; ++n) {
            const AlgebraElement& u = U[labels.spokes[n]];
            theta[n] = std::atan2(u[1], u[0]);
        }
        const AlgebraElement& h = H[static_cast<std::size_t>(labels.center)];
        return hexagon_fprime(theta, std::atan2(h[1], h[0]));
    };
}

// ---------------------------------------------------------------------------
// Checks

IdentityReport check_prop1_u1(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                              const U1Observable& f, double beta,
                              const QuadratureOptions& options) {
    const U1Model model(polygon, sigma);
    require_reflection_symmetric(f, model.n_edges());
    const auto r = integrate_u1_multi(
        [&](const U1Point& p, std::span<double> out) {
            const double v = f(p);
            out[0] = v * model.weight_prelinearized(p, beta);
            out[1] = v * model.weight_linearized(p, beta);
        },
        2, model.n_edges(), options);
    IdentityReport report = exact_report("prop1-u1", r[0], r[1]);
    report.set("beta", beta);
    describe(report, polygon);
    describe(report, options);
    return report;
}

IdentityReport check_prop1_su2(const TriangulatedPolygon& polygon, const HiggsH& h,
                               const FieldFunction& g, double beta,
                               const MonteCarloOptions& options) {
    if (h.kind != AlgebraKind::quaternion) {
        fail(ErrorKind::invalid_argument, "prop1-su2 needs a quaternion boundary condition");
    }
    require_coordinate_symmetric(polygon, h, g, LinkSampler::haar);
    IdentityReport r = paired_linearization(
        "prop1-su2", polygon, h, g,
        [&](const GaugeField& U) { return weight_prelinearized(polygon, U, beta); },
        [&](const GaugeField& U) { return weight_linearized(polygon, U, h, beta); },
        LinkSampler::haar, options);
    r.set("beta", beta);
    return r;
}

IdentityReport check_prop_s2(const TriangulatedPolygon& polygon, const HiggsH& h,
                             const FieldFunction& f, double beta,
                             const MonteCarloOptions& options) {
    if (h.kind != AlgebraKind::quaternion) {
        fail(ErrorKind::invalid_argument, "prop-s2 needs a quaternion boundary condition");
    }
    for (int e : polygon.boundary_edges()) {
        const Edge& edge = polygon.edges()[static_cast<std::size_t>(e)];
        if (h.h[static_cast<std::size_t>(edge.from)] == h.h[static_cast<std::size_t>(edge.to)]) {
            fail(ErrorKind::invalid_argument,
                 "boundary h is not proper: equal values across boundary edge " + std::to_string(e));
        }
    }
    require_coordinate_symmetric(polygon, h, f, LinkSampler::imaginary);
    IdentityReport r = paired_linearization(
        "prop-s2", polygon, h, f,
        [&](const GaugeField& U) { return weight_prelinearized(polygon, U, beta); },
        [&](const GaugeField& U) { return weight_linearized_s2(polygon, U, h, beta); },
        LinkSampler::imaginary, options);
    r.set("beta", beta);
    return r;
}

IdentityReport check_lemma_plus(const TriangulatedPolygon& polygon, const HiggsH& h,
                                std::uint64_t trials, std::uint64_t seed) {
    if (h.kind != AlgebraKind::quaternion) {
        fail(ErrorKind::invalid_argument, "lemma-plus needs a quaternion boundary condition");
    }
    Rng rng = substream(seed, 0);
    std::uniform_int_distribution<int> unit(0, 3);
    std::bernoulli_distribution flip(0.5);

    std::uint64_t positive = 0;
    std::uint64_t negative_faces = 0;
    std::uint64_t non_unit = 0;
    GaugeField U(polygon, h);
    PottsAssignment H{h.h};
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (int v : polygon.interior_vertices()) H.unit[static_cast<std::size_t>(v)] = unit(rng);
        const HiggsField field = higgs_from_potts(h, H);
        for (std::size_t s = 0; s < polygon.interior_edges().size(); ++s) {
            const Edge& e = polygon.edges()[static_cast<std::size_t>(polygon.interior_edges()[s])];
            AlgebraElement u = field[static_cast<std::size_t>(e.from)] *
                               conj(field[static_cast<std::size_t>(e.to)]);
            if (flip(rng)) u = -u;
            U.set_interior(polygon, static_cast<int>(s), u);
        }
        int sign = 1;
        for (std::size_t f = 0; f < polygon.faces().size(); ++f) {
            const auto b = as_signed_basis(face_holonomy(polygon, U, static_cast<int>(f)));
            if (!b || b->first != 0) {
                ++non_unit;
                sign = 0;
                break;
            }
            if (b->second < 0) ++negative_faces;
            sign *= b->second;
        }
        if (sign == 1) ++positive;
    }
    IdentityReport r = exact_report(
        "lemma-plus", Estimate::exact(static_cast<double>(positive), trials, Method::enumeration),
        Estimate::exact(static_cast<double>(trials), trials, Method::enumeration));
    r.gate = 0.0;
    r.decide();
    r.set("trials", static_cast<std::int64_t>(trials));
    r.set("seed", static_cast<std::int64_t>(seed));
    r.set("negative_faces", static_cast<std::int64_t>(negative_faces));
    r.set("non_real_holonomies", static_cast<std::int64_t>(non_unit));
    describe(r, polygon);
    return r;
}

IdentityReport check_octonion_counterexample() {
    constexpr AlgebraKind O = AlgebraKind::octonion;
    for (int a = 1; a < 8; ++a) {
        for (int b = 1; b < 8; ++b) {
            for (int c = 1; c < 8; ++c) {
                const auto ea = AlgebraElement::basis(O, a);
                const auto eb = AlgebraElement::basis(O, b);
                const auto ec = AlgebraElement::basis(O, c);
                if (associator_sign(ea, eb, ec) != -1) continue;

                const AlgebraElement hA = ea * eb;
                const AlgebraElement& hB = eb;
                const AlgebraElement& hC = ec;
                const AlgebraElement hol = ((hA * conj(hB)) * (hB * conj(hC))) * (hC * conj(hA));
                const auto basis = as_signed_basis(hol);
                const double value = basis && basis->first == 0 ? basis->second : hol.re();
                IdentityReport r = exact_report(
                    "octonion-counterexample", Estimate::exact(value, 1, Method::enumeration),
                    Estimate::exact(-1.0, 1, Method::enumeration));
                r.gate = 0.0;
                r.decide();
                r.set("a", static_cast<std::int64_t>(a + 1));
                r.set("b", static_cast<std::int64_t>(b + 1));
                r.set("c", static_cast<std::int64_t>(c + 1));
                r.set("holonomy_is_real_unit", basis.has_value() && basis->first == 0);
                return r;
            }
        }
    }
    fail(ErrorKind::table_corruption, "no octonion basis triple with (ab)c = -a(bc)");
}

IdentityReport probe_octonion_prop1(const TriangulatedPolygon& polygon, const HiggsH& h,
                                    double beta, const MonteCarloOptions& options) {
    if (h.kind != AlgebraKind::octonion) {
        fail(ErrorKind::invalid_argument, "the octonion probe needs an octonion boundary condition");
    }
    IdentityReport r = paired_linearization(
        "octonion-probe", polygon, h, field_constant(1.0),
        [&](const GaugeField& U) { return weight_prelinearized(polygon, U, beta); },
        [&](const GaugeField& U) { return weight_linearized(polygon, U, h, beta); },
        LinkSampler::haar, options);
    r.gated = false;
    r.set("beta", beta);
    r.set("sigmas", r.gate > 0.0 ? mc_gate_sigmas * std::abs(r.lhs.value - r.rhs.value) / r.gate
                                 : 0.0);
    r.decide();
    return r;
}

IdentityReport check_prop_lS(const TriangulatedPolygon& polygon, const HiggsH& h,
                             const HiggsObservable& f, double beta, double lambda,
                             const MonteCarloOptions& options) {
    const AlgebraKind kind = h.kind;
    if (kind == AlgebraKind::octonion) {
        fail(ErrorKind::unsupported_operation, "gauge transformations need a group");
    }
    const auto interior_count = polygon.interior_vertices().size();

    {
        Rng rng = substream(assertion_seed, 3);
        GaugeField U(polygon, h);
        std::vector<AlgebraElement> Hint(interior_count), g(interior_count);
        for (int trial = 0; trial < symmetry_trials; ++trial) {
            sample_links(polygon, U, LinkSampler::haar, rng);
            for (auto& x : Hint) x = random_group_element(kind, rng);
            for (auto& x : g) x = random_group_element(kind, rng);
            const HiggsField H = higgs_from_interior(polygon, h, Hint);
            const auto [U2, H2] = gauge_transform_higgs(polygon, U, H, g);
            if (!close(f(U, H), f(U2, H2))) {
                fail(ErrorKind::invalid_observable,
                     "observable changes under a gauge transformation");
            }
        }
    }

    auto weight = [&](const GaugeField& U, const HiggsField& H) {
        return weight_linearized_higgs(polygon, U, H, beta, lambda);
    };
    const GaugeField base(polygon, h);

    // H in S^V, enumerated for every sampled U.
    std::vector<HiggsField> unit_fields;
    for (const auto& potts : PottsRange(polygon, dimension(kind), h.h, false)) {
        unit_fields.push_back(higgs_from_potts(h, potts));
    }
    const SampleFactory on_s = [&]() -> SampleFunction {
        auto U = std::make_shared<GaugeField>(base);
        return [&, U](Rng& rng, std::span<double> out) {
            sample_links(polygon, *U, LinkSampler::haar, rng);
            out[0] = 0.0;
            out[1] = 0.0;
            for (const auto& H : unit_fields) {
                const double w = weight(*U, H);
                out[0] += f(*U, H) * w;
                out[1] += w;
            }
        };
    };
    // H Haar-distributed on G^V.
    const SampleFactory on_g = [&]() -> SampleFunction {
        auto U = std::make_shared<GaugeField>(base);
        auto Hint = std::make_shared<std::vector<AlgebraElement>>(interior_count);
        return [&, U, Hint](Rng& rng, std::span<double> out) {
            sample_links(polygon, *U, LinkSampler::haar, rng);
            for (auto& x : *Hint) x = random_group_element(kind, rng);
            const HiggsField H = higgs_from_interior(polygon, h, *Hint);
            const double w = weight(*U, H);
            out[0] = f(*U, H) * w;
            out[1] = w;
        };
    };

    MonteCarloOptions g_options = options;
    g_options.stream_offset = options.stream_offset + (std::uint64_t{1} << 40);
    const Moments ms = mc_moments(on_s, 2, options);
    const Moments mg = mc_moments(on_g, 2, g_options);

    IdentityReport r;
    r.name = "prop-lS";
    r.lhs = ms.ratio(0, 1);
    r.rhs = mg.ratio(0, 1);
    const double se = std::hypot(r.lhs.std_error, r.rhs.std_error);
    r.gate = mc_gate_sigmas * se;
    r.set("diff_stderr", se);
    r.set("beta", beta);
    r.set("lambda", std::isinf(lambda) ? MetaValue(std::string("inf")) : MetaValue(lambda));
    r.set("unit_set_size", static_cast<std::int64_t>(dimension(kind)));
    r.decide();
    describe(r, polygon);
    describe(r, options);
    return r;
}

IdentityReport check_iso1(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                          const QuadratureOptions& options) {
    const U1Model model(polygon, sigma);
    const std::size_t states = model.n_spin_states();
    const auto r = integrate_u1_multi(
        [&](const U1Point& p, std::span<double> out) {
            double sum = 0.0;
            for (std::size_t k = 0; k < states; ++k) {
                out[k] = model.weight_spin(p, k);
                sum += out[k];
            }
            out[states] = sum;
        },
        states + 1, model.n_edges(), options);

    const double total = r[states].value;
    const double uniform = 1.0 / static_cast<double>(states);
    std::size_t worst = 0;
    double worst_diff = -1.0;
    for (std::size_t k = 0; k < states; ++k) {
        const double d = std::abs(r[k].value / total - uniform);
        if (d > worst_diff) {
            worst_diff = d;
            worst = k;
        }
    }

    // U-marginal: the sum over Sigma is the P''_inf numerator, pointwise.
    double marginal_diff = 0.0;
    Rng rng = substream(assertion_seed, 4);
    for (int t = 0; t < symmetry_trials; ++t) {
        const std::vector<double> theta = random_angles(model.n_edges(), rng);
        const U1Angles angles(theta);
        const double direct = weight_linearized_u1(polygon, model.field(angles.point()), sigma,
                                                   std::numeric_limits<double>::infinity());
        marginal_diff = std::max(marginal_diff, std::abs(direct - model.spin_sum(angles.point())));
    }

    IdentityReport report = exact_report(
        "iso1", Estimate::exact(r[worst].value / total, r[worst].n, Method::quadrature),
        Estimate::exact(uniform, states, Method::enumeration));
    report.set("z_infinity", total);
    report.set("u_marginal_max_diff", marginal_diff);
    report.passed = report.passed && marginal_diff <= exact_gate;
    describe(report, polygon);
    describe(report, options);
    return report;
}

IdentityReport check_iso2(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                          std::uint64_t trials, std::uint64_t seed) {
    const HiggsH h = sqrt_of(sigma);
    Rng rng = substream(seed, 0);
    std::uniform_int_distribution<int> unit(0, 1);
    PottsAssignment H{h.h};
    SpinAssignment spins{sigma.sigma};
    double worst = 0.0;
    double lhs_at_worst = 0.0;
    double rhs_at_worst = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::vector<double> theta = random_angles(polygon.interior_edges().size(), rng);
        const GaugeField U = GaugeField::from_angles(polygon, sigma, theta);
        for (int v : polygon.interior_vertices()) {
            const int x = unit(rng);
            H.unit[static_cast<std::size_t>(v)] = x;
            spins.spin[static_cast<std::size_t>(v)] = x == 0 ? 1 : -1;  // H^2
        }
        const double lhs = weight_unit_higgs(polygon, U, higgs_from_potts(h, H));
        const double rhs = weight_spin(polygon, U, spins);
        if (std::abs(lhs - rhs) >= worst) {
            worst = std::abs(lhs - rhs);
            lhs_at_worst = lhs;
            rhs_at_worst = rhs;
        }
    }
    IdentityReport r = exact_report("iso2", Estimate::exact(lhs_at_worst, trials, Method::enumeration),
                                    Estimate::exact(rhs_at_worst, trials, Method::enumeration));
    r.gate = 1e-12;
    r.decide();
    r.set("trials", static_cast<std::int64_t>(trials));
    r.set("seed", static_cast<std::int64_t>(seed));
    describe(r, polygon);
    return r;
}

IdentityReport check_iso3(const TriangulatedPolygon& polygon, const HiggsH& h,
                          const MonteCarloOptions& options) {
    if (h.kind != AlgebraKind::quaternion) {
        fail(ErrorKind::invalid_argument, "iso3 needs a quaternion boundary condition");
    }
    std::vector<HiggsField> fields;
    for (const auto& potts : PottsRange(polygon, 4, h.h, false)) {
        fields.push_back(higgs_from_potts(h, potts));
    }
    const GaugeField base(polygon, h);
    const SampleFactory factory = [&]() -> SampleFunction {
        auto U = std::make_shared<GaugeField>(base);
        return [&, U](Rng& rng, std::span<double> out) {
            sample_links(polygon, *U, LinkSampler::haar, rng);
            for (std::size_t k = 0; k < fields.size(); ++k) {
                out[k] = weight_unit_higgs(polygon, *U, fields[k]);
            }
        };
    };
    const Moments m = mc_moments(factory, fields.size(), options);

    IdentityReport r;
    r.name = "iso3";
    // Worst standardized deviation from the first assignment.
    double worst_z = -1.0;
    std::size_t worst = 0;
    for (std::size_t k = 1; k < fields.size(); ++k) {
        const Estimate d = m.difference(k, 0);
        const double z = d.std_error > 0.0 ? std::abs(d.value) / d.std_error : 0.0;
        if (z > worst_z) {
            worst_z = z;
            worst = k;
        }
    }
    r.lhs = m.estimate(worst);
    r.rhs = m.estimate(0);
    r.gate = mc_gate_sigmas * m.difference(worst, 0).std_error;
    r.set("assignments", static_cast<std::int64_t>(fields.size()));
    r.set("expected_mass", std::pow(0.25, static_cast<double>(polygon.interior_edges().size())));
    r.decide();
    describe(r, polygon);
    describe(r, options);
    return r;
}

IdentityReport check_corollary(const TriangulatedPolygon& polygon, const SqrtSigma& sigma,
                               const SpinFunction& f, const QuadratureOptions& options) {
    const U1Model model(polygon, sigma);
    IdentityReport r = exact_report("corollary", conditional_expectation(model, f, options),
                                    percolation_expectation(polygon, sigma, f));
    describe(r, polygon);
    describe(r, options);
    return r;
}

IdentityReport check_variance_strictness(const TriangulatedPolygon& polygon,
                                         const SqrtSigma& sigma, const SpinFunction& f,
                                         const QuadratureOptions& options) {
    const U1Model model(polygon, sigma);
    const VarianceComparison v = compare_variances(model, f, options);
    IdentityReport r;
    r.name = "variance-strictness";
    r.lhs = Estimate::exact(v.conditional, 0, Method::quadrature);
    r.rhs = Estimate::exact(v.direct, model.n_spin_states(), Method::enumeration);
    // Required margin: the grid-doubling change of the conditional variance.
    r.gate = std::abs(v.conditional - v.conditional_coarse);
    r.abs_diff = std::abs(v.direct - v.conditional);
    r.passed = v.direct - v.conditional > r.gate;
    r.set("grid_fine", static_cast<std::int64_t>(v.grid));
    r.set("conditional_coarse", v.conditional_coarse);
    describe(r, polygon);
    return r;
}

}  // namespace lgt

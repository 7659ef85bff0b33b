// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "baer/classifier.hpp"
#include "baer/harness.hpp"
#include "oracles.hpp"

using namespace baer;
using namespace baer::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail << "failed: ";
        else detail << "; ";
        detail << what;
        pass = false;
    }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string values_text(const Aggregate& a) {
    std::string out = "{";
    for (const auto& [v, n] : a.values) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

// Runs shared by several criteria.
struct Runs {
    RunResult q3, q5, q7, q9;
    double q3_seconds = 0, q5_seconds = 0;
};

RunResult timed_verify(const RunConfig& cfg, double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    RunResult r = verify(cfg);
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

RunConfig sample_config(std::uint32_t q, std::size_t n) {
    RunConfig cfg;
    cfg.q = q;
    cfg.mode = Mode::Sample;
    cfg.sample_count = n;
    cfg.rng_seed = 42;
    cfg.worker_count = workers();
    return cfg;
}

void criterion1(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t expected[] = {7, 17, 31, 49};
    std::size_t i = 0;
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
        const FieldCtx f = field_for_order(q);
        const Predictor p(f);
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = q; b < q * q; b += q + 1) {
                const Report r = p.predict(example_family(f, FieldElem{a}, f.ext_elem(b)));
                o.require(r.oracle == expected[i] && r.predicted == expected[i] && r.ok(),
                          "q=" + std::to_string(q) + " conic " + r.conic + " gave " +
                              std::to_string(r.predicted) + "/" + std::to_string(r.oracle));
            }
        ++i;
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(s < 1.0, "took " + std::to_string(s) + " s");
    if (o.pass) o.detail << "E_q = 7, 17, 31, 49 for q = 3, 5, 7, 9 (" << s << " s)";
}

void criterion2(Outcome& o) {
    std::mt19937_64 rng(2);
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
        const FieldCtx f = field_for_order(q);
        const Predictor p(f);
        std::uniform_int_distribution<std::uint32_t> base(0, q - 1), ext(1, q * q - 1);
        for (int n = 0; n < 100;) {
            std::array<ExtElem, 6> coef;
            const ExtElem s = f.ext_elem(ext(rng));
            for (auto& c : coef) c = f.mul(s, f.embed(FieldElem{base(rng)}));
            if (FieldCtx::is_zero(conic_determinant(f, conic_matrix(f, coef)))) continue;
            ++n;
            const Report r = p.predict(make_conic(f, coef));
            o.require(r.kase == Case::DefinedOverFq && r.oracle == q * q && r.k == q + 1 && r.ok(),
                      "q=" + std::to_string(q) + " conic " + r.conic);
        }
    }
    if (o.pass) o.detail << "400 conics over GF(q): E_q = q^2, k = q + 1";
}

void criterion3(Outcome& o, const Runs& runs) {
    const Aggregate& a = runs.q3.aggregate;
    RunConfig cfg;
    cfg.q = 3;
    for (const auto& f : acceptance_failures(cfg, runs.q3)) o.require(false, f);
    o.require(a.processed + a.degenerate == 7381, "processed + degenerate != 7381");
    o.detail << (o.pass ? "" : "; ") << a.processed << " conics, " << a.degenerate
             << " degenerate vectors, values " << values_text(a) << ", " << a.non_fq_maximal
             << " conics not over GF(3) reach 9 (reported), " << runs.q3_seconds << " s";
}

void criterion4(Outcome& o, const Runs& runs) {
    const Aggregate& a = runs.q5.aggregate;
    for (const auto& f : acceptance_failures(sample_config(5, 1'000'000), runs.q5))
        o.require(false, f);
    o.require(a.processed == 1'000'000, "processed != 10^6");
    o.require(a.non_fq_maximal == 0, "conic not over GF(5) with E_q = 25");
    o.require(runs.q5_seconds < 600, "over 10 min");
    o.detail << (o.pass ? "" : "; ") << a.processed << " conics, values " << values_text(a)
             << ", " << runs.q5_seconds << " s";
}

void criterion5(Outcome& o, const Runs& runs) {
    for (const RunResult* r : {&runs.q7, &runs.q9}) {
        const Aggregate& a = r->aggregate;
        for (const auto& f : acceptance_failures(sample_config(a.q, 100'000), *r))
            o.require(false, "q=" + std::to_string(a.q) + ": " + f);
        o.require(a.processed == 100'000, "q=" + std::to_string(a.q) + " processed != 10^5");
        // Every value (q^2 excluded) must be (q^2 + (alpha-1) q - n0)/2 for an
        // admissible pair.
        const std::size_t q = a.q;
        for (const auto& [v, n] : a.values) {
            bool found = false;
            for (long alpha : {1, 2, 3, 4, 5, 7})
                for (long n0 = 0; n0 <= 3; ++n0)
                    if ((alpha - n0) % 2 == 0 &&
                        static_cast<long>(2 * v) == static_cast<long>(q * q) + (alpha - 1) * static_cast<long>(q) - n0)
                        found = true;
            o.require(found, "q=" + std::to_string(q) + " value " + std::to_string(v));
        }
        o.detail << (o.pass ? "" : "; ") << "q=" << a.q << " values " << values_text(a) << " ";
    }
}

void criterion6(Outcome& o, const Runs& runs) {
    for (const RunResult* r : {&runs.q3, &runs.q5, &runs.q7, &runs.q9}) {
        const Aggregate& a = r->aggregate;
        std::string seen;
        for (const auto& [alpha, n] : a.alpha_smooth) {
            o.require(in_weil_set(alpha), "q=" + std::to_string(a.q) + " alpha " + std::to_string(alpha));
            if (a.q <= 5) o.require(alpha <= 5, "q=" + std::to_string(a.q) + " alpha > 5");
            seen += (seen.empty() ? "" : ",") + std::to_string(alpha);
        }
        o.detail << "q=" << a.q << " alpha {" << seen << "} ";
    }
}

void criterion7(Outcome& o) {
    const FieldCtx f = field_for_order(3);
    const auto plane = enumerate_pg2q2(f);
    const std::size_t Q = f.ext_order();
    const auto e = enumerate_conics_through_base_point(f);
    std::size_t conics = 0, surfaces = 0, singular = 0;
    for (const auto& c : e.conics) {
        ++conics;
        const TangentOracle oracle(f, c, plane);
        std::size_t external = 0;
        std::optional<QuadClass> ext_class, int_class;
        bool agree = true, relative = true;
        for (const auto& p : plane) {
            const PointClass pc = classify_point(f, c, p);
            agree = agree && pc == oracle.classify(p);
            const QuadClass j = joachimsthal_class(f, c, p);
            if (pc == PointClass::External) {
                ++external;
                if (!ext_class) ext_class = j;
                relative = relative && j == *ext_class;
            } else if (pc == PointClass::Internal) {
                if (!int_class) int_class = j;
                relative = relative && j == *int_class;
            }
        }
        relative = relative && ext_class && int_class &&
                   (*ext_class * *int_class) == QuadClass::NonSquare;
        const std::string name = format_conic(f, c);
        o.require(agree, "classification differs from tangent count for " + name);
        o.require(relative, "relative classes fail for " + name);
        o.require(external == Q * (Q + 1) / 2, "external count for " + name);

        if (is_defined_over_fq(f, c)) continue;
        const CubicSurface s = surface_of(f, c);
        if (is_reducible(f, s)) continue;
        ++surfaces;
        o.require(count_points(f, s).n_inf == f.q() + 1, "n_inf != q + 1 for " + name);
        const auto pts = singular_points_q2(f, s);
        o.require(pts.size() <= 1, "several singular points for " + name);
        for (const auto& p : pts)
            for (const auto& z : p) o.require(FieldCtx::in_base(z), "singular point off GF(q) for " + name);
        singular += !pts.empty();
        o.require(find_singularity(f, s).singular == !pts.empty(), "double point missed for " + name);
    }
    o.detail << (o.pass ? "" : "; ") << conics << " conics x " << plane.size() << " points, "
             << surfaces << " irreducible surfaces (" << singular << " singular)";
}

void criterion8(Outcome& o, const Runs& runs) {
    for (const RunResult* r : {&runs.q5, &runs.q7, &runs.q9}) {
        const Aggregate& a = r->aggregate;
        const std::size_t q = a.q;
        o.require(2 * a.min_external + 3 >= q * q,
                  "q=" + std::to_string(q) + " min E_q " + std::to_string(a.min_external));
        o.detail << "q=" << q << " min " << a.min_external << " >= " << (q * q - 3) / 2.0 << " ";
    }
}

}  // namespace

int main() {
    std::cout << "workers: " << workers() << std::endl;
    Runs runs;
    {
        RunConfig cfg;
        cfg.q = 3;
        cfg.worker_count = workers();
        runs.q3 = timed_verify(cfg, runs.q3_seconds);
        runs.q5 = timed_verify(sample_config(5, 1'000'000), runs.q5_seconds);
        double ignored = 0;
        runs.q7 = timed_verify(sample_config(7, 100'000), ignored);
        runs.q9 = timed_verify(sample_config(9, 100'000), ignored);
    }

    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"example family values", criterion1},
        {"conics over GF(q) are maximal", criterion2},
        {"exhaustive q = 3", [&](Outcome& o) { criterion3(o, runs); }},
        {"sampled q = 5", [&](Outcome& o) { criterion4(o, runs); }},
        {"sampled q = 7 and q = 9", [&](Outcome& o) { criterion5(o, runs); }},
        {"Weil set for smooth surfaces", [&](Outcome& o) { criterion6(o, runs); }},
        {"structural invariants at q = 3", criterion7},
        {"lower bound (q^2 - 3)/2", [&](Outcome& o) { criterion8(o, runs); }},
    };
    int failed = 0;
    int index = 1;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index++ << " (" << name
                  << "): " << o.detail.str() << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}

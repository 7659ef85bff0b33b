#include "baer/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "baer/report_io.hpp"

namespace baer {

FieldCtx field_for_order(std::uint32_t q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be an odd prime power");
    std::uint32_t p = 0;
    for (std::uint32_t d = 3; d <= q; d += 2) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::invalid_argument("q must be an odd prime power");
    return FieldCtx::make(p, k);
}

void validate(const RunConfig& cfg) {
    if (cfg.worker_count == 0) throw std::invalid_argument("worker count must be positive");
    if (cfg.mode == Mode::Exhaustive && cfg.q != 3)
        throw std::invalid_argument("exhaustive runs are limited to q = 3");
    if (cfg.mode == Mode::Sample) {
        if (!cfg.rng_seed) throw std::invalid_argument("sampled runs need a seed");
        if (cfg.q != 5 && cfg.q != 7 && cfg.q != 9)
            throw std::invalid_argument("sampled runs support q in {5, 7, 9}");
    }
}

BasePointEnumeration enumerate_conics_through_base_point(const FieldCtx& ctx) {
    if (ctx.q() != 3) throw std::invalid_argument("exhaustive enumeration is limited to q = 3");
    const std::uint32_t n = ctx.ext_order();
    BasePointEnumeration out;
    std::array<ExtElem, 5> coef{};
    for (std::size_t lead = 0; lead < 5; ++lead) {
        std::size_t count = 1;
        for (std::size_t i = lead + 1; i < 5; ++i) count *= n;
        for (std::size_t idx = 0; idx < count; ++idx) {
            coef.fill(ExtElem{});
            coef[lead] = ctx.embed(ctx.one());
            std::size_t x = idx;
            for (std::size_t j = 5; j-- > lead + 1;) {
                coef[j] = ctx.ext_elem(static_cast<std::uint32_t>(x % n));
                x /= n;
            }
            ++out.total;
            const auto general = general_form(coef);
            if (FieldCtx::is_zero(conic_determinant(ctx, conic_matrix(ctx, general)))) {
                ++out.degenerate;
                continue;
            }
            out.conics.push_back(make_conic(ctx, general));
        }
    }
    return out;
}

namespace {

// Uniform draw from [0, n) by rejection, independent of the standard
// library's distribution implementations.
std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t n) {
    const std::uint64_t limit = (~std::uint64_t{0} / n) * n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::uint32_t>(x % n);
}

}  // namespace

std::vector<Conic> sample_chunk(const FieldCtx& ctx, std::uint64_t seed, std::size_t chunk,
                                std::size_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<Conic> out;
    out.reserve(count);
    const std::uint32_t n = ctx.ext_order();
    while (out.size() < count) {
        std::array<ExtElem, 5> coef{};
        for (auto& c : coef) c = ctx.ext_elem(uniform_below(rng, n));
        const auto general = general_form(coef);
        if (FieldCtx::is_zero(conic_determinant(ctx, conic_matrix(ctx, general)))) continue;
        out.push_back(make_conic(ctx, general));
    }
    return out;
}

std::vector<Conic> sample_conics(const FieldCtx& ctx, std::size_t n, std::uint64_t seed) {
    std::vector<Conic> out;
    out.reserve(n);
    for (std::size_t chunk = 0; out.size() < n; ++chunk) {
        const auto part = sample_chunk(ctx, seed, chunk, std::min(kSampleChunk, n - out.size()));
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

void Aggregate::add(const Report& r) {
    ++processed;
    ++cases[to_string(r.kase)];
    ++k_distribution[r.k];
    if (r.kase != Case::DefinedOverFq) {
        ++values[r.oracle];
        if (r.oracle == std::size_t(q) * q) ++non_fq_maximal;
    }
    if (processed == 1 || r.oracle < min_external) min_external = r.oracle;
    if (r.alpha) {
        ++alpha[*r.alpha];
        if (r.kase == Case::IrreducibleNonsingular) ++alpha_smooth[*r.alpha];
    }
    if (r.n0) ++n0[*r.n0];
    if (r.singularity) {
        const auto& s = *r.singularity;
        ++beta[s.at_infinity ? "inf" : std::to_string(s.beta.v)];
        ++cone_kind[to_string(s.cone_kind)];
        ++alpha_lines[s.alpha_lines];
    }
    if (!r.match)
        mismatches.push_back(r.conic + " (case " + to_string(r.kase) + ": predicted " +
                             std::to_string(r.predicted) + ", oracle " +
                             std::to_string(r.oracle) + ")");
    for (const auto& v : r.violations) violations.push_back(r.conic + ": " + v);
}

void Aggregate::merge(const Aggregate& o) {
    if (q == 0) q = o.q;
    if (o.processed > 0)
        min_external = processed == 0 ? o.min_external : std::min(min_external, o.min_external);
    processed += o.processed;
    degenerate += o.degenerate;
    refused += o.refused;
    non_fq_maximal += o.non_fq_maximal;
    for (const auto& [key, n] : o.cases) cases[key] += n;
    for (const auto& [key, n] : o.values) values[key] += n;
    for (const auto& [key, n] : o.k_distribution) k_distribution[key] += n;
    for (const auto& [key, n] : o.alpha) alpha[key] += n;
    for (const auto& [key, n] : o.alpha_smooth) alpha_smooth[key] += n;
    for (const auto& [key, n] : o.n0) n0[key] += n;
    for (const auto& [key, n] : o.beta) beta[key] += n;
    for (const auto& [key, n] : o.cone_kind) cone_kind[key] += n;
    for (const auto& [key, n] : o.alpha_lines) alpha_lines[key] += n;
    mismatches.insert(mismatches.end(), o.mismatches.begin(), o.mismatches.end());
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

nlohmann::json Aggregate::to_json() const {
    auto keyed = [](const auto& m) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [key, n] : m) {
            if constexpr (std::is_same_v<std::decay_t<decltype(key)>, std::string>)
                j[key] = n;
            else
                j[std::to_string(key)] = n;
        }
        return j;
    };
    nlohmann::json j;
    j["q"] = q;
    j["processed"] = processed;
    j["degenerate"] = degenerate;
    j["refused"] = refused;
    j["cases"] = keyed(cases);
    j["values"] = keyed(values);
    j["k_distribution"] = keyed(k_distribution);
    j["alpha"] = keyed(alpha);
    j["alpha_smooth"] = keyed(alpha_smooth);
    j["n0"] = keyed(n0);
    j["beta"] = keyed(beta);
    j["cone_kind"] = keyed(cone_kind);
    j["alpha_lines"] = keyed(alpha_lines);
    j["non_fq_maximal"] = non_fq_maximal;
    j["min_external"] = min_external;
    j["mismatches"] = mismatches;
    j["violations"] = violations;
    return j;
}

std::string resolve_output_path(const std::string& path) {
    if (path.empty()) return path;
    const char* dir = std::getenv("BAER_OUTPUT_DIR");
    const std::filesystem::path p(path);
    if (dir && *dir && p.is_relative()) return (std::filesystem::path(dir) / p).string();
    return path;
}

namespace {

struct Shard {
    Aggregate aggregate;
    std::string rows;
};

void process(const Predictor& predictor, const std::vector<Conic>& conics, const RunConfig& cfg,
             Shard& shard) {
    shard.aggregate.q = cfg.q;
    const bool keep_rows = !cfg.output_path.empty();
    for (const auto& c : conics) {
        Report r;
        try {
            r = predictor.predict(c);
        } catch (const Refusal&) {
            ++shard.aggregate.refused;
            continue;
        } catch (const std::logic_error& e) {
            shard.aggregate.violations.push_back(format_conic(predictor.field(), c) + ": " +
                                                 e.what());
            continue;
        }
        shard.aggregate.add(r);
        if (!keep_rows) continue;
        if (cfg.format == Format::Csv) {
            shard.rows += to_csv_row(r);
            shard.rows += '\n';
        } else {
            shard.rows += to_json(r).dump();
            shard.rows += '\n';
        }
    }
}

}  // namespace

RunResult verify(const RunConfig& cfg) {
    validate(cfg);
    const FieldCtx ctx = field_for_order(cfg.q);
    const Predictor predictor(ctx);

    // Work is split into chunks; shards are merged in chunk order so the
    // result does not depend on the number of workers.
    std::vector<std::vector<Conic>> exhaustive_chunks;
    std::size_t degenerate = 0;
    std::size_t chunk_count = 0;
    if (cfg.mode == Mode::Exhaustive) {
        auto e = enumerate_conics_through_base_point(ctx);
        degenerate = e.degenerate;
        for (std::size_t i = 0; i < e.conics.size(); i += kSampleChunk) {
            const auto end = std::min(e.conics.size(), i + kSampleChunk);
            exhaustive_chunks.emplace_back(e.conics.begin() + i, e.conics.begin() + end);
        }
        chunk_count = exhaustive_chunks.size();
    } else {
        chunk_count = (cfg.sample_count + kSampleChunk - 1) / kSampleChunk;
    }

    std::vector<Shard> shards(chunk_count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < chunk_count; i = next++) {
            if (cfg.mode == Mode::Exhaustive) {
                process(predictor, exhaustive_chunks[i], cfg, shards[i]);
            } else {
                const std::size_t begin = i * kSampleChunk;
                const std::size_t count = std::min(kSampleChunk, cfg.sample_count - begin);
                process(predictor, sample_chunk(ctx, *cfg.rng_seed, i, count), cfg, shards[i]);
            }
        }
    };
    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::size_t>(cfg.worker_count, std::max<std::size_t>(chunk_count, 1)));
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < n_workers; ++w) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    RunResult result;
    result.aggregate.q = cfg.q;
    result.aggregate.degenerate = degenerate;
    for (const auto& s : shards) result.aggregate.merge(s.aggregate);

    if (!cfg.output_path.empty()) {
        const std::string path = resolve_output_path(cfg.output_path);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + path);
        if (cfg.format == Format::Csv) out << csv_header() << '\n';
        for (const auto& s : shards) out << s.rows;
    }

    const auto allowed = theorem_value_set(cfg.q);
    const std::size_t q2 = std::size_t(cfg.q) * cfg.q;
    for (const auto& [value, n] : result.aggregate.values) {
        (void)n;
        if (!allowed.contains(value) || (cfg.q >= 5 && value == q2))
            result.value_set_violations.push_back(value);
    }
    return result;
}

std::vector<std::string> acceptance_failures(const RunConfig& cfg, const RunResult& result) {
    const Aggregate& a = result.aggregate;
    std::vector<std::string> out;
    if (!a.mismatches.empty())
        out.push_back(std::to_string(a.mismatches.size()) + " mismatches, first: " +
                      a.mismatches.front());
    if (!a.violations.empty())
        out.push_back(std::to_string(a.violations.size()) + " violations, first: " +
                      a.violations.front());
    if (a.refused != 0) out.push_back(std::to_string(a.refused) + " refused conics");
    for (std::size_t v : result.value_set_violations)
        out.push_back("value " + std::to_string(v) + " outside the admissible set");
    if (cfg.q >= 5 && a.non_fq_maximal != 0)
        out.push_back(std::to_string(a.non_fq_maximal) + " conics not over GF(q) with E_q = q^2");

    std::set<std::size_t> observed;
    for (const auto& [value, n] : a.values) observed.insert(value);
    if (cfg.mode == Mode::Exhaustive && cfg.q == 3) {
        const std::set<std::size_t> expected{3, 4, 5, 6, 7, 8, 9};
        if (observed != expected) out.push_back("observed value set differs from {3,...,9}");
    }
    if (cfg.q == 5) {
        const std::set<std::size_t> allowed{11, 12, 14, 15, 17, 19, 20, 21, 25};
        for (std::size_t v : observed)
            if (!allowed.contains(v)) out.push_back("value " + std::to_string(v) + " observed at q = 5");
    }
    return out;
}

}  // namespace baer

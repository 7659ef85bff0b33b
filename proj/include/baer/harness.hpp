#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "baer/classifier.hpp"
#include "baer/conic.hpp"
#include "baer/gf.hpp"

namespace baer {

/// GF(q) for an odd prime power q; throws std::invalid_argument otherwise.
FieldCtx field_for_order(std::uint32_t q);

enum class Mode { Exhaustive, Sample };
enum class Format { Csv, Json };

struct RunConfig {
    std::uint32_t q = 3;
    Mode mode = Mode::Exhaustive;
    std::size_t sample_count = 1'000'000;
    std::optional<std::uint64_t> rng_seed;
    unsigned worker_count = 1;
    std::string output_path;  // empty: no row output
    Format format = Format::Csv;
};

/// Throws std::invalid_argument: exhaustive runs are limited to q = 3 and
/// sampled runs need a seed and q in {5, 7, 9}.
void validate(const RunConfig& cfg);

struct BasePointEnumeration {
    std::vector<Conic> conics;   // nonsingular, in enumeration order
    std::size_t degenerate = 0;  // skipped coefficient vectors
    std::size_t total = 0;       // |PG(4,q^2)|
};

/// Every projective coefficient vector (a:b:c:d:e) of
/// aX^2 + bXY + cXZ + dYZ + eZ^2, first nonzero entry 1, in lexicographic
/// order of canonical indices. Guarded to q = 3.
BasePointEnumeration enumerate_conics_through_base_point(const FieldCtx& ctx);

/// Samples are produced in chunks of this size, each from its own generator
/// seeded by (seed, chunk index), so any sharding reproduces the stream.
inline constexpr std::size_t kSampleChunk = 4096;

/// Nonsingular conics aX^2 + bXY + cXZ + dYZ + eZ^2 with uniform coefficients
/// (degenerate draws redrawn); the stream position range
/// [chunk * kSampleChunk, chunk * kSampleChunk + count).
std::vector<Conic> sample_chunk(const FieldCtx& ctx, std::uint64_t seed, std::size_t chunk,
                                std::size_t count);
/// The first n conics of the stream for `seed`.
std::vector<Conic> sample_conics(const FieldCtx& ctx, std::size_t n, std::uint64_t seed);

struct Aggregate {
    std::uint32_t q = 0;
    std::size_t processed = 0;
    std::size_t degenerate = 0;
    std::size_t refused = 0;
    std::map<std::string, std::size_t> cases;
    /// E_q over conics not defined over GF(q).
    std::map<std::size_t, std::size_t> values;
    std::map<std::size_t, std::size_t> k_distribution;
    std::map<long, std::size_t> alpha;
    std::map<long, std::size_t> alpha_smooth;  // nonsingular surfaces only
    std::map<std::size_t, std::size_t> n0;
    std::map<std::string, std::size_t> beta;
    std::map<std::string, std::size_t> cone_kind;
    std::map<std::size_t, std::size_t> alpha_lines;
    /// Conics not over GF(q) reaching E_q = q^2.
    std::size_t non_fq_maximal = 0;
    std::size_t min_external = 0;
    std::vector<std::string> mismatches;
    std::vector<std::string> violations;

    void add(const Report& r);
    /// Order-independent on the counters; list fields concatenate in call order.
    void merge(const Aggregate& other);
    bool clean() const { return mismatches.empty() && violations.empty(); }
    nlohmann::json to_json() const;
};

struct RunResult {
    Aggregate aggregate;
    /// Observed E_q values outside theorem_value_set(q) (q^2 excluded for q >= 5).
    std::vector<std::size_t> value_set_violations;
    bool ok() const { return aggregate.clean() && value_set_violations.empty(); }
};

/// Runs oracle and pipeline on every conic of the configured stream, writes
/// rows to cfg.output_path (if set) and aggregates.
RunResult verify(const RunConfig& cfg);

/// Reasons a run fails its acceptance checks: mismatches, violations,
/// refusals, values outside the admissible set, and the per-q value-set
/// expectations (exact {3..9} coverage for exhaustive q = 3, the nine
/// observed values at q = 5, no non-F_q conic reaching q^2 for q >= 5).
std::vector<std::string> acceptance_failures(const RunConfig& cfg, const RunResult& result);

/// Output path with BAER_OUTPUT_DIR prepended to relative paths when set.
std::string resolve_output_path(const std::string& path);

}  // namespace baer

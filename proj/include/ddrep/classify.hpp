#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddrep/homology.hpp"

namespace ddrep {

struct ClassifyOptions {
    int max_t = 2;
    int max_s = 2;
    std::vector<EtaParam> etas;  // empty: {1, -1}, plus {0, inf} when m = 1
    size_t budget = 4096;        // total module dimension allowed in the manifest
    unsigned jobs = 1;
    std::uint64_t seed = 1;
};

// Expected Loewy type of a family member, from the tag alone.
LoewyType expected_type(const GroupDatum& D, const FamilyTag& tag);

// Every family member within the bounds, in a fixed order (before the budget is applied).
std::vector<FamilyTag> manifest_tags(const GroupDatum& D, const ClassifyOptions& opt);

struct ManifestEntry {
    FamilyTag tag;
    size_t dim = 0;
    bool built = false;
    std::string error;  // constructor or check failure
    bool relations_hold = false;
    LoewyType type, expected;
    size_t end_local = 0;
    bool ok() const { return built && relations_hold && type == expected && end_local == 1; }
};

struct PairVerdict {
    size_t i = 0, j = 0;
    IsoOutcome outcome = IsoOutcome::Undecided;
    std::string reason;
};

struct ClassifyReport {
    std::vector<ManifestEntry> entries;
    bool truncated = false;
    size_t skipped = 0;  // tags dropped by the budget
    size_t total_dim = 0, max_dim = 0;
    size_t pairs = 0, distinct_by_invariant = 0, distinct_by_hom = 0;
    std::vector<PairVerdict> non_distinct;  // pairs not certified distinct
    std::vector<std::pair<std::string, size_t>> family_counts;
    bool all_ok() const;
};

// Builds and checks every manifest entry and certifies pairwise non-isomorphism.
ClassifyReport classify(const DatumPtr& D, const ClassifyOptions& opt);

// Best-effort identification of M with a classified family member of the same dimension.
std::optional<FamilyTag> match_family(const ModuleRep& M, int max_t = 3, int max_s = 3, std::uint64_t seed = 1);

// Runs f(0..count-1) on `jobs` worker threads pulling indices from a shared counter.
void parallel_for(size_t count, unsigned jobs, const std::function<void(size_t)>& f);

}  // namespace ddrep

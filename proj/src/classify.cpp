#include "ddrep/classify.hpp"

#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace ddrep {

void parallel_for(size_t count, unsigned jobs, const std::function<void(size_t)>& f) {
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

LoewyType expected_type(const GroupDatum& D, const FamilyTag& tag) {
    const size_t m = static_cast<size_t>(D.m);
    switch (tag.family) {
        case Family::V: return {1, 1, 1};
        case Family::P: return {1, 1, 3};
        case Family::OmegaPower: {
            if (tag.s == 0) return {1, 1, 1};
            const size_t s = static_cast<size_t>(std::abs(tag.s));
            return tag.s > 0 ? LoewyType{s + 1, s, 2} : LoewyType{s, s + 1, 2};
        }
        case Family::T1:
        case Family::T1bar:
        case Family::W1: return {1, 1, 2};
        case Family::Tt:
        case Family::Ttbar:
        case Family::Wt: return {static_cast<size_t>(tag.t), static_cast<size_t>(tag.t), 2};
        case Family::M1: return {m, m, 2};
        case Family::Mt: return {m * static_cast<size_t>(tag.t), m * static_cast<size_t>(tag.t), 2};
        case Family::Z: break;
    }
    throw ParameterError("no expected type for family " + family_name(tag.family));
}

namespace {

std::vector<EtaParam> default_etas(const GroupDatum& D) {
    std::vector<EtaParam> e{EtaParam::finite(CycScalar(1)), EtaParam::finite(CycScalar(-1))};
    if (D.m == 1) {
        e.push_back(EtaParam::finite(CycScalar(0)));
        e.push_back(EtaParam::inf());
    }
    return e;
}

FamilyTag make_tag(Family f, int l, const Weight& w) {
    FamilyTag t;
    t.family = f;
    t.l = l;
    t.lambda = w;
    return t;
}

}  // namespace

std::vector<FamilyTag> manifest_tags(const GroupDatum& D, const ClassifyOptions& opt) {
    const std::vector<EtaParam> etas = opt.etas.empty() ? default_etas(D) : opt.etas;
    const auto classes = enumerate_weights(D);
    std::vector<FamilyTag> tags;
    for (const auto& wc : classes) tags.push_back(make_tag(Family::V, wc.l, wc.weight));
    std::vector<WeightClass> proper;
    for (const auto& wc : classes)
        if (wc.l < D.n) proper.push_back(wc);
    for (const auto& wc : proper) tags.push_back(make_tag(Family::P, wc.l, wc.weight));
    for (int s = 1; s <= opt.max_s; ++s)
        for (int sign : {1, -1})
            for (const auto& wc : proper) {
                FamilyTag t = make_tag(Family::OmegaPower, wc.l, wc.weight);
                t.s = sign * s;
                tags.push_back(t);
            }
    auto eta_ok_for_m = [](const EtaParam& e) { return !e.infinite && !e.is_zero(); };
    for (int t = 1; t <= opt.max_t; ++t) {
        if (D.m > 1) {
            for (Family f : {Family::Tt, Family::Ttbar})
                for (const auto& wc : proper) {
                    FamilyTag tag = make_tag(f, wc.l, wc.weight);
                    tag.t = t;
                    tags.push_back(tag);
                }
            for (const auto& wc : proper) {
                if (!(tau_orbit_rep(D, wc.weight) == wc.weight)) continue;
                for (const auto& e : etas) {
                    if (!eta_ok_for_m(e)) continue;
                    FamilyTag tag = make_tag(Family::Mt, wc.l, wc.weight);
                    tag.t = t;
                    tag.eta = e;
                    tags.push_back(tag);
                }
            }
        } else {
            for (const auto& wc : proper)
                for (const auto& e : etas) {
                    FamilyTag tag = make_tag(Family::Wt, wc.l, wc.weight);
                    tag.t = t;
                    tag.eta = e;
                    tags.push_back(tag);
                }
        }
    }
    return tags;
}

bool ClassifyReport::all_ok() const {
    for (const auto& e : entries)
        if (!e.ok()) return false;
    return non_distinct.empty();
}

ClassifyReport classify(const DatumPtr& Dp, const ClassifyOptions& opt) {
    const GroupDatum& D = *Dp;
    ClassifyReport rep;
    const std::vector<FamilyTag> tags = manifest_tags(D, opt);

    std::vector<ModuleRep> modules(tags.size());
    std::vector<ManifestEntry> entries(tags.size());
    parallel_for(tags.size(), opt.jobs, [&](size_t i) {
        ManifestEntry& e = entries[i];
        e.tag = tags[i];
        e.expected = expected_type(D, tags[i]);
        try {
            modules[i] = build_family(Dp, tags[i]);
            e.built = true;
            e.dim = modules[i].dim();
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
    });

    // The budget keeps a prefix of the fixed tag order so truncation is deterministic.
    size_t kept = 0;
    for (; kept < entries.size(); ++kept) {
        if (rep.total_dim + entries[kept].dim > opt.budget) break;
        rep.total_dim += entries[kept].dim;
    }
    rep.truncated = kept < entries.size();
    rep.skipped = entries.size() - kept;
    entries.resize(kept);
    modules.resize(kept);

    std::vector<IsoInvariants> inv(kept);
    parallel_for(kept, opt.jobs, [&](size_t i) {
        ManifestEntry& e = entries[i];
        if (!e.built) return;
        try {
            e.relations_hold = verify_relations(modules[i]).all_hold();
            inv[i] = iso_invariants(modules[i]);
            e.type = inv[i].type;
            e.end_local = inv[i].end_local;
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
    });

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < kept; ++i)
        for (size_t j = i + 1; j < kept; ++j)
            if (entries[i].built && entries[j].built) pairs.emplace_back(i, j);
    std::vector<PairVerdict> verdicts(pairs.size());
    std::vector<char> by_invariant(pairs.size(), 0);
    parallel_for(pairs.size(), opt.jobs, [&](size_t k) {
        const auto [i, j] = pairs[k];
        PairVerdict& v = verdicts[k];
        v.i = i;
        v.j = j;
        if (auto why = invariant_mismatch(inv[i], inv[j])) {
            v.outcome = IsoOutcome::No;
            v.reason = *why;
            by_invariant[k] = 1;
            return;
        }
        IsoVerdict iv = is_isomorphic(modules[i], inv[i], modules[j], inv[j], opt.seed + k);
        v.outcome = iv.outcome;
        v.reason = iv.reason;
    });
    rep.pairs = pairs.size();
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (verdicts[k].outcome != IsoOutcome::No) rep.non_distinct.push_back(verdicts[k]);
        else if (by_invariant[k]) ++rep.distinct_by_invariant;
        else ++rep.distinct_by_hom;
    }

    std::map<std::string, size_t> counts;
    for (const auto& e : entries) {
        ++counts[family_name(e.tag.family)];
        rep.max_dim = std::max(rep.max_dim, e.dim);
    }
    rep.family_counts.assign(counts.begin(), counts.end());
    rep.entries = std::move(entries);
    return rep;
}

std::optional<FamilyTag> match_family(const ModuleRep& M, int max_t, int max_s, std::uint64_t seed) {
    const DatumPtr& Dp = M.datum_ptr();
    const GroupDatum& D = *Dp;
    if (M.dim() == 0) return std::nullopt;
    const IsoInvariants im = iso_invariants(M);

    ClassifyOptions opt;
    opt.max_t = max_t;
    opt.max_s = max_s;
    opt.etas = default_etas(D);
    // A band's holonomy pins down its parameter up to inversion.
    if (im.holonomy.applicable && im.holonomy.charpoly.size() == 2) {
        const CycScalar root = -im.holonomy.charpoly[0];
        opt.etas.push_back(EtaParam::finite(root));
        if (!root.is_zero()) opt.etas.push_back(EtaParam::finite(root.inverse()));
    }

    std::set<Weight> support;
    for (const auto& [w, d] : im.weights) support.insert(w);
    for (const FamilyTag& tag : manifest_tags(D, opt)) {
        if (tag.family != Family::Mt && !support.count(tag.lambda)) continue;
        if (!(expected_type(D, tag) == im.type)) continue;
        ModuleRep cand;
        try {
            cand = build_family(Dp, tag);
        } catch (const ParameterError&) {
            continue;
        }
        if (cand.dim() != M.dim()) continue;
        IsoVerdict v = is_isomorphic(M, im, cand, iso_invariants(cand), seed);
        if (v.outcome == IsoOutcome::Yes) return tag;
    }
    return std::nullopt;
}

}  // namespace ddrep

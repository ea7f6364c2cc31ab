#include <CLI11.hpp>
#include <iomanip>
#include <chrono>
#include <iostream>
#include <sstream>

#include "ddrep/arseq.hpp"
#include "ddrep/classify.hpp"
#include "ddrep/io.hpp"

using namespace ddrep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct Globals {
    std::string format = "text";
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool json() const { return format == "json"; }
};

void emit(const Globals& g, const Json& j, const std::string& text) {
    if (g.json()) std::cout << j.dump(2) << '\n';
    else std::cout << text;
}

DatumPtr load_datum(const std::string& path) { return datum_from_json(read_json_file(path)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string type_string(const LoewyType& t) {
    return "(" + std::to_string(t.s) + "," + std::to_string(t.t) + ") rl=" + std::to_string(t.rl);
}

std::string labels_string(const Multiplicities& m) {
    std::string out;
    for (const auto& [lab, k] : m) {
        if (!out.empty()) out += " + ";
        if (k > 1) out += std::to_string(k) + "*";
        out += "V(" + std::to_string(lab.l) + "," + weight_to_string(lab.lambda) + ")";
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- datum / weights

int cmd_datum(const Globals& g, const std::string& file) {
    DatumPtr D = load_datum(file);
    const auto counts = simple_counts(*D);
    const size_t K = kernel_K(*D).size();
    Json jc = Json::object();
    for (const auto& [d, c] : counts) jc[std::to_string(d)] = c;
    Json j{{"kind", kind_name(D->kind)}, {"rho", scalar_to_json(D->rho)}, {"field_order", D->field_order}, {"n", D->n},
           {"m", D->m},          {"K", K},                          {"counts", jc}};
    std::ostringstream t;
    t << "kind         " << kind_name(D->kind) << "\n"
      << "rho          " << D->rho.to_string() << "  (in Q(zeta_" << D->field_order << "))\n"
      << "n            " << D->n << "\n"
      << "m            " << D->m << "\n"
      << "|K|          " << K << "\n"
      << "simple counts (dim: count)\n";
    for (const auto& [d, c] : counts) t << "  " << d << ": " << c << "\n";
    emit(g, j, t.str());
    return kExitOk;
}

std::string sub_name(TopSubclass s) {
    switch (s) {
        case TopSubclass::Prime: return "I'_n";
        case TopSubclass::DoublePrime: return "I''_n";
        default: return "";
    }
}

int cmd_weights(const Globals& g, const std::string& file) {
    DatumPtr D = load_datum(file);
    Json arr = Json::array();
    std::ostringstream t;
    t << "weight                 l    d  class\n";
    for (const auto& wc : enumerate_weights(*D)) {
        Json e{{"lambda", weight_to_json(wc.weight)}, {"l", wc.l}, {"d", wc.d}};
        if (wc.sub != TopSubclass::None) e["subclass"] = sub_name(wc.sub);
        arr.push_back(e);
        std::string w = weight_to_string(wc.weight);
        w.resize(std::max<size_t>(w.size(), 22), ' ');
        t << w << " " << wc.l << std::setw(5) << wc.d << "  " << (wc.sub == TopSubclass::None ? "I_" + std::to_string(wc.l) : sub_name(wc.sub)) << "\n";
    }
    emit(g, Json{{"weights", arr}}, t.str());
    return kExitOk;
}

// ---------------------------------------------------------------- module commands

struct BuildArgs {
    std::string file, family, lambda, eta, basis, out;
    int l = 1, t = 1, s = 0;
};

int cmd_build(const Globals& g, const BuildArgs& a) {
    DatumPtr D = load_datum(a.file);
    FamilyTag tag;
    tag.family = family_from_name(a.family);
    tag.l = a.l;
    tag.lambda = weight_from_string(a.lambda);
    tag.t = a.t;
    tag.s = a.s;
    if (!a.eta.empty()) tag.eta = eta_from_string(a.eta, D->field_order);
    if (!a.basis.empty()) {
        if (a.basis == "natural") tag.basis = BasisKind::Natural;
        else if (a.basis == "standard") tag.basis = BasisKind::Standard;
        else throw ParameterError("basis must be 'natural' or 'standard'");
    }
    ModuleRep M = build_family(D, tag);
    Json j = module_to_json(M);
    j["tag"] = family_tag_to_json(tag);
    if (!a.out.empty()) {
        write_json_file(a.out, j);
        if (!g.json()) std::cout << "wrote " << tag.to_string() << " (dim " << M.dim() << ") to " << a.out << "\n";
        else std::cout << Json{{"written", a.out}, {"dim", M.dim()}}.dump(2) << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& file) {
    ModuleRep M = module_from_json(read_json_file(file));
    const RelationReport r = verify_relations(M);
    Json j{{"dim", M.dim()}, {"relations", relation_report_to_json(r)}, {"all_hold", r.all_hold()}};
    std::ostringstream t;
    t << "dim " << M.dim() << "\n";
    for (const auto& v : r.items) t << (v.holds ? "  ok    " : "  FAIL  ") << v.name << "\n";
    if (r.all_hold()) {
        const LoewyType ty = loewy_type(M);
        const size_t el = end_local_dim(M);
        j["type"] = loewy_to_json(ty);
        j["end_local_dim"] = el;
        t << "type " << type_string(ty) << ", end_local_dim " << el << "\n";
    }
    t << (r.all_hold() ? "all relations hold\n" : "relations FAIL\n");
    emit(g, j, t.str());
    return r.all_hold() ? kExitOk : kExitFailed;
}

int cmd_analyze(const Globals& g, const std::string& file) {
    ModuleRep M = module_from_json(read_json_file(file));
    const RelationReport r = verify_relations(M);
    if (!r.all_hold()) {
        emit(g, Json{{"relations", relation_report_to_json(r)}, {"all_hold", false}}, "relations FAIL; nothing to analyze\n");
        return kExitFailed;
    }
    // Socle and radical series by iterating on quotients / submodules.
    std::vector<size_t> soc_series, rad_series;
    {
        ModuleRep cur = M;
        size_t total = 0;
        while (cur.dim() > 0) {
            Submodule s = socle(cur);
            total += s.module.dim();
            soc_series.push_back(total);
            cur = quotient_module(cur, s.inclusion).module;
        }
        cur = M;
        rad_series.push_back(M.dim());
        while (cur.dim() > 0) {
            cur = radical(cur).module;
            rad_series.push_back(cur.dim());
        }
    }
    const LoewyType ty = loewy_type(M);
    const Multiplicities factors = composition_factors(M);
    const size_t el = end_local_dim(M);
    const auto match = match_family(M, 3, 3, g.seed);
    Json j{{"dim", M.dim()},
           {"socle_series_dims", soc_series},
           {"radical_series_dims", rad_series},
           {"socle", multiplicities_to_json(socle_constituents(M))},
           {"head", multiplicities_to_json(head_constituents(M))},
           {"composition_factors", multiplicities_to_json(factors)},
           {"composition_length", composition_length(factors)},
           {"type", loewy_to_json(ty)},
           {"end_local_dim", el},
           {"family", match ? family_tag_to_json(*match) : Json("outside classified grid or bounds")}};
    std::ostringstream t;
    t << "dim                 " << M.dim() << "\n"
      << "type                " << type_string(ty) << "\n"
      << "composition length  " << composition_length(factors) << "\n"
      << "factors             " << labels_string(factors) << "\n"
      << "socle               " << labels_string(socle_constituents(M)) << "\n"
      << "head                " << labels_string(head_constituents(M)) << "\n"
      << "end_local_dim       " << el << (el == 1 ? " (indecomposable)" : "") << "\n"
      << "family              " << (match ? match->to_string() : "outside classified grid or bounds") << "\n";
    emit(g, j, t.str());
    return kExitOk;
}

int cmd_compare(const Globals& g, const std::string& fa, const std::string& fb) {
    ModuleRep A = module_from_json(read_json_file(fa));
    ModuleRep B = module_from_json(read_json_file(fb));
    const IsoVerdict v = is_isomorphic(A, B, g.seed);
    emit(g, iso_verdict_to_json(v), outcome_name(v.outcome) + " (" + v.reason + ")\n");
    return kExitOk;
}

// ---------------------------------------------------------------- AR sequences

struct ArArgs {
    std::string file, lemma, lambda, eta;
    int l = 0, max_t = 1;
};

std::vector<WeightClass> selected_weights(const GroupDatum& D, const ArArgs& a, bool orbit_reps) {
    std::vector<WeightClass> out;
    const Weight only = a.lambda.empty() ? Weight{} : weight_from_string(a.lambda);
    for (const auto& wc : enumerate_weights(D)) {
        if (wc.l >= D.n) continue;
        if (a.l && wc.l != a.l) continue;
        if (!a.lambda.empty() && !(wc.weight == only)) continue;
        if (a.lambda.empty() && orbit_reps && !(tau_orbit_rep(D, wc.weight) == wc.weight)) continue;
        out.push_back(wc);
    }
    if (out.empty()) throw ParameterError("no weight in I_l (1 <= l < n) matches the selection");
    return out;
}

int cmd_ar(const Globals& g, const ArArgs& a) {
    DatumPtr D = load_datum(a.file);
    if (a.max_t < 0) throw ParameterError("--max-t must be non-negative");
    std::vector<std::pair<std::string, SesInstance>> seqs;
    auto push = [&](const WeightClass& wc, SesInstance s) {
        seqs.emplace_back("l=" + std::to_string(wc.l) + ", lambda=" + weight_to_string(wc.weight), std::move(s));
    };
    if (a.lemma == "4.5") {
        for (const auto& wc : selected_weights(*D, a, false)) {
            push(wc, simple_ar_sequence(D, wc.l, wc.weight, g.seed));
            for (int t = 0; t <= a.max_t; ++t) {
                push(wc, syzygy_ar_sequence(D, wc.l, wc.weight, t, false, g.seed));
                push(wc, syzygy_ar_sequence(D, wc.l, wc.weight, t, true, g.seed));
            }
        }
    } else {
        Family fam;
        if (a.lemma == "4.9") fam = Family::Tt;
        else if (a.lemma == "4.10") fam = Family::Ttbar;
        else if (a.lemma == "4.20") fam = Family::Mt;
        else if (a.lemma == "4.28") fam = Family::Wt;
        else throw ParameterError("--lemma must be one of 4.5, 4.9, 4.10, 4.20, 4.28");
        const EtaParam eta = a.eta.empty() ? EtaParam::finite(CycScalar(1)) : eta_from_string(a.eta, D->field_order);
        for (const auto& wc : selected_weights(*D, a, fam == Family::Mt))
            for (auto& s : chain_ar_sequences(D, fam, wc.l, wc.weight, eta, std::max(1, a.max_t))) push(wc, std::move(s));
    }
    Json arr = Json::array();
    std::ostringstream t;
    bool all = true;
    for (const auto& [where, s] : seqs) {
        const SesReport r = ar_candidate_check(s.A, s.B, s.C, s.f, s.g, g.seed);
        all = all && r.ar_candidate();
        Json e = ses_report_to_json(r);
        e["sequence"] = s.name;
        e["parameters"] = where;
        e["dims"] = {s.A.dim(), s.B.dim(), s.C.dim()};
        arr.push_back(e);
        t << (r.ar_candidate() ? "ok    " : "FAIL  ") << s.name << "  [" << where << "]  dims " << s.A.dim() << "," << s.B.dim() << ","
          << s.C.dim() << "  exact=" << yes_no(r.exact) << " split=" << yes_no(r.split) << " endloc=" << r.end_local_a << ","
          << r.end_local_c << " A~Omega2C=" << (r.translate ? outcome_name(r.translate->outcome) : "-") << "\n";
    }
    emit(g, Json{{"lemma", a.lemma}, {"sequences", arr}, {"all_ar_candidates", all}}, t.str());
    return all ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    std::string file, etas;
    int max_t = 2, max_s = 2;
    size_t budget = 4096;
};

int cmd_classify(const Globals& g, const ClassifyArgs& a) {
    DatumPtr D = load_datum(a.file);
    ClassifyOptions opt;
    opt.max_t = a.max_t;
    opt.max_s = a.max_s;
    opt.budget = a.budget;
    opt.jobs = g.jobs;
    opt.seed = g.seed;
    if (!a.etas.empty()) {
        std::stringstream ss(a.etas);
        std::string tok;
        while (std::getline(ss, tok, ',')) opt.etas.push_back(eta_from_string(tok, D->field_order));
    }
    const auto start = std::chrono::steady_clock::now();
    const ClassifyReport rep = classify(D, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Json entries = Json::array();
    std::ostringstream t;
    t << "  #  ok   dim  type          endloc  module\n";
    for (size_t i = 0; i < rep.entries.size(); ++i) {
        const auto& e = rep.entries[i];
        Json je{{"tag", family_tag_to_json(e.tag)},
                {"dim", e.dim},
                {"relations_hold", e.relations_hold},
                {"type", loewy_to_json(e.type)},
                {"expected_type", loewy_to_json(e.expected)},
                {"end_local_dim", e.end_local},
                {"ok", e.ok()}};
        if (!e.error.empty()) je["error"] = e.error;
        entries.push_back(je);
        std::string ty = type_string(e.type);
        ty.resize(std::max<size_t>(ty.size(), 12), ' ');
        t << std::string(i < 10 ? 2 : (i < 100 ? 1 : 0), ' ') << i << "  " << (e.ok() ? "ok " : "BAD") << "  " << std::string(e.dim < 10 ? 3 : (e.dim < 100 ? 2 : 1), ' ')
          << e.dim << "  " << ty << "  " << e.end_local << "       " << e.tag.to_string() << (e.error.empty() ? "" : "  error: " + e.error) << "\n";
    }
    Json nd = Json::array();
    for (const auto& p : rep.non_distinct) nd.push_back(Json{{"i", p.i}, {"j", p.j}, {"verdict", outcome_name(p.outcome)}, {"reason", p.reason}});
    Json counts = Json::object();
    for (const auto& [f, c] : rep.family_counts) counts[f] = c;
    Json j{{"entries", entries},
           {"truncated", rep.truncated},
           {"skipped", rep.skipped},
           {"pairs", rep.pairs},
           {"distinct_by_invariant", rep.distinct_by_invariant},
           {"distinct_by_hom", rep.distinct_by_hom},
           {"not_certified_distinct", nd},
           {"counts", counts},
           {"total_dim", rep.total_dim},
           {"max_dim", rep.max_dim},
           {"all_ok", rep.all_ok()}};
    if (rep.truncated) t << "TRUNCATED: budget " << a.budget << " reached, " << rep.skipped << " further modules skipped\n";
    t << "pairs " << rep.pairs << ": " << rep.distinct_by_invariant << " distinct by invariants, " << rep.distinct_by_hom << " by Hom dimensions, "
      << rep.non_distinct.size() << " not certified\n";
    for (const auto& p : rep.non_distinct)
        t << "  #" << p.i << " vs #" << p.j << ": " << outcome_name(p.outcome) << " (" << p.reason << ")\n";
    t << "counts:";
    for (const auto& [f, c] : rep.family_counts) t << " " << f << "=" << c;
    t << "\ntotal dim " << rep.total_dim << ", max dim " << rep.max_dim << "\n" << (rep.all_ok() ? "all checks pass\n" : "CHECKS FAIL\n");
    emit(g, j, t.str());
    // Timing goes to stderr so stdout stays byte-identical across runs.
    std::cerr << "wall time " << secs << " s\n";
    return rep.all_ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact module computations for Drinfeld doubles of rank-one pointed Hopf algebras"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomized searches")->capture_default_str();
    app.fallthrough();

    std::function<int()> run;

    auto* datum = app.add_subcommand("datum", "Datum commands")->require_subcommand(1);
    std::string datum_file;
    datum->add_subcommand("check", "Validate a datum file and count simples")
        ->callback([&] { run = [&] { return cmd_datum(g, datum_file); }; })
        ->add_option("file", datum_file)->required();

    auto* weights = app.add_subcommand("weights", "Weight commands")->require_subcommand(1);
    std::string weights_file;
    weights->add_subcommand("list", "List weights with their classes")
        ->callback([&] { run = [&] { return cmd_weights(g, weights_file); }; })
        ->add_option("file", weights_file)->required();

    auto* module = app.add_subcommand("module", "Module commands")->require_subcommand(1);
    BuildArgs ba;
    auto* build = module->add_subcommand("build", "Construct a family member");
    build->add_option("file", ba.file, "Datum file")->required();
    build->add_option("--family", ba.family, "Z, V, P, T1, T1bar, Tt, Ttbar, M1, Mt, W1, Wt, OmegaPower")->required();
    build->add_option("--l", ba.l)->capture_default_str();
    build->add_option("--lambda", ba.lambda, "Weight as g1,..|h1,..")->required();
    build->add_option("--t", ba.t)->capture_default_str();
    build->add_option("--s", ba.s)->capture_default_str();
    build->add_option("--eta", ba.eta, "inf, an integer or p/q");
    build->add_option("--basis", ba.basis, "natural or standard");
    build->add_option("-o,--output", ba.out, "Write the module file here instead of stdout");
    build->callback([&] { run = [&] { return cmd_build(g, ba); }; });

    std::string verify_file, analyze_file, cmp_a, cmp_b;
    module->add_subcommand("verify", "Check the defining relations")
        ->callback([&] { run = [&] { return cmd_verify(g, verify_file); }; })
        ->add_option("file", verify_file)->required();
    module->add_subcommand("analyze", "Socle and radical series, type, indecomposability, family")
        ->callback([&] { run = [&] { return cmd_analyze(g, analyze_file); }; })
        ->add_option("file", analyze_file)->required();
    auto* compare = module->add_subcommand("compare", "Isomorphism test");
    compare->add_option("a", cmp_a)->required();
    compare->add_option("b", cmp_b)->required();
    compare->callback([&] { run = [&] { return cmd_compare(g, cmp_a, cmp_b); }; });

    auto* ar = app.add_subcommand("ar", "Almost split sequences")->require_subcommand(1);
    ArArgs aa;
    auto* archeck = ar->add_subcommand("check", "Build and check the sequences of a lemma");
    archeck->add_option("file", aa.file, "Datum file")->required();
    archeck->add_option("--lemma", aa.lemma)->required()->check(CLI::IsMember({"4.5", "4.9", "4.10", "4.20", "4.28"}));
    archeck->add_option("--max-t", aa.max_t)->capture_default_str();
    archeck->add_option("--l", aa.l, "Restrict to this l (0: all)");
    archeck->add_option("--lambda", aa.lambda, "Restrict to this weight");
    archeck->add_option("--eta", aa.eta, "Band / string parameter (default 1)");
    archeck->callback([&] { run = [&] { return cmd_ar(g, aa); }; });

    ClassifyArgs ca;
    auto* cls = app.add_subcommand("classify", "Enumerate the classified families within bounds");
    cls->add_option("file", ca.file, "Datum file")->required();
    cls->add_option("--max-t", ca.max_t)->capture_default_str();
    cls->add_option("--max-s", ca.max_s)->capture_default_str();
    cls->add_option("--etas", ca.etas, "Comma-separated list, e.g. 1,-1,0,inf");
    cls->add_option("--budget", ca.budget)->capture_default_str();
    cls->callback([&] { run = [&] { return cmd_classify(g, ca); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        return run ? run() : kExitInvalid;
    } catch (const DatumError& e) {
        Json j{{"error", e.what()}, {"chi_to_n", e.chi_to_n}, {"a_to_n", e.a_to_n}};
        if (g.json()) std::cout << j.dump(2) << '\n';
        else {
            std::cerr << "invalid datum: " << e.what() << "\n  chi^n exponents: ";
            for (int c : e.chi_to_n) std::cerr << c << ' ';
            std::cerr << "\n  a^n: ";
            for (int c : e.a_to_n) std::cerr << c << ' ';
            std::cerr << "\n";
        }
        return kExitInvalid;
    } catch (const InternalInconsistency& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::exception& e) {
        // ParameterError, SizeMismatch, JSON type errors and friends are all input problems.
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
}

#include "sphereprod/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sphereprod/decompose.hpp"
#include "sphereprod/errors.hpp"
#include "sphereprod/finite_group.hpp"
#include "sphereprod/ledger.hpp"
#include "sphereprod/matrix_io.hpp"
#include "sphereprod/rewrite.hpp"
#include "sphereprod/sphere_maps.hpp"
#include "sphereprod/subgroups.hpp"
#include "sphereprod/whitehead.hpp"

namespace sphereprod::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "json";
    std::uint64_t seed = 42;
    std::size_t samples = 100000;
    std::optional<std::string> mod;
    std::optional<long> k;
    std::optional<std::string> k_class;
    bool no_verify = false;

    std::string group, target, map_name, file, generators_file, subgroup_file, group_file;
    std::size_t n = 0;
    std::size_t resolution = kDefaultResolution;
};

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json matrix_json(const IntMatrix& a) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(integer_json(a(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json residue_json(const ResidueMatrix& a) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(a(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string residue_text(const ResidueMatrix& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < a.dim(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < a.dim(); ++c) os << (c ? "," : "") << a(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

Json tuple_json(const AlgebraTuple& t) {
    Json out = Json::array();
    for (const auto& x : t) {
        Json comp = Json::array();
        for (std::size_t i = 0; i < x.dim(); ++i) comp.push_back(x[i]);
        out.push_back(std::move(comp));
    }
    return out;
}

CommandResult make(const std::string& command, const Options& opt) {
    CommandResult r;
    r.json_output = opt.format == "json";
    r.payload["schema"] = kSchemaVersion;
    r.payload["command"] = command;
    return r;
}

Integer modulus_or(const Options& opt, long fallback) {
    if (!opt.mod) return fallback;
    Integer m;
    if (m.set_str(*opt.mod, 10) != 0) throw InputError("--mod must be an integer");
    if (m < 2) throw InputError("--mod must be at least 2");
    return m;
}

std::uint32_t small_modulus(const Options& opt) {
    const Integer m = modulus_or(opt, 2);
    if (!m.fits_ulong_p() || m >= Integer(1UL << 31)) throw InputError("--mod is too large for enumeration");
    return static_cast<std::uint32_t>(m.get_ui());
}

KClass k_class(const Options& opt) {
    if (opt.k_class) return parse_k_class(*opt.k_class);
    if (opt.k) {
        if (*opt.k < 1) throw InputError("--k must be positive");
        return k_class_of(*opt.k);
    }
    throw InputError("one of --k or --k-class is required");
}

// First reason a unimodular matrix fails the W_n(2) row condition.
std::string w2_reason(const IntMatrix& a) {
    if (det(a) != 1) return "det(A) = " + det(a).get_str() + ", not 1";
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t l = j + 1; l < a.dim(); ++l)
            for (std::size_t s = 0; s < a.dim(); ++s)
                if ((a(j, s) * a(l, s)) % 2 != 0) {
                    std::ostringstream os;
                    os << "rows " << j + 1 << " and " << l + 1 << " are both odd in column " << s + 1;
                    return os.str();
                }
    return "member";
}

Json certificate_json(const CosetCertificate& c) {
    Json j;
    j["uses_tau"] = c.uses_tau;
    j["sigma"] = c.sigma.cycles();
    j["residual"] = matrix_json(c.residual);
    return j;
}

CosetCertificate checked_certificate(const IntMatrix& a, const Options& opt) {
    CosetCertificate c = coset_certificate(a);
    if (!opt.no_verify && !(c.reconstruct() == a)) throw VerificationError("coset certificate does not reconstruct A");
    return c;
}

const char* verification_tag(const Options& opt) { return opt.no_verify ? "UNVERIFIED" : "OK"; }

CommandResult cmd_member(const Options& opt) {
    CommandResult r = make("member", opt);
    const IntMatrix a = read_matrix_file(opt.file);
    std::ostringstream text;
    bool member = false;
    std::string reason;
    r.payload["group"] = opt.group;
    if (opt.group == "gamma") {
        const Integer m = modulus_or(opt, 2);
        member = in_congruence(a, m);
        r.payload["mod"] = integer_json(m);
        if (det(a) != 1)
            reason = "det(A) = " + det(a).get_str() + ", not 1";
        else
            reason = member ? "member" : "A is not the identity mod " + m.get_str();
    } else if (opt.group == "w2") {
        member = in_W2(a);
        reason = w2_reason(a);
        if (member) {
            const auto c = checked_certificate(a, opt);
            r.payload["certificate"] = certificate_json(c);
            r.payload["verification"] = verification_tag(opt);
            text << "certificate: " << (c.uses_tau ? "TAU " : "") << "P" << c.sigma.cycles() << " * "
                 << c.residual << "\n";
        }
    } else if (opt.group == "hr") {
        const KClass kc = k_class(opt);
        const auto v = hR_member(a, kc);
        member = v.member;
        reason = v.reason;
        r.payload["k_class"] = to_string(kc);
    } else {
        throw InputError("--group must be gamma, w2 or hr");
    }
    r.payload["member"] = member;
    r.payload["reason"] = reason;
    r.text = std::string(member ? "member" : "non-member") + ": " + reason + "\n" + text.str();
    r.status = member ? Status::ok : Status::non_member;
    return r;
}

CommandResult cmd_coset(const Options& opt) {
    CommandResult r = make("coset", opt);
    const IntMatrix a = read_matrix_file(opt.file);
    if (!in_W2(a)) {
        r.payload["member"] = false;
        r.payload["reason"] = w2_reason(a);
        r.text = "non-member: " + w2_reason(a) + "\n";
        r.status = Status::non_member;
        return r;
    }
    const auto c = checked_certificate(a, opt);
    r.payload["member"] = true;
    r.payload["certificate"] = certificate_json(c);
    r.payload["verification"] = verification_tag(opt);
    std::ostringstream text;
    text << "uses_tau: " << (c.uses_tau ? "true" : "false") << "\nsigma: " << c.sigma.cycles()
         << "\nresidual: " << c.residual << "\n" << verification_tag(opt) << "\n";
    r.text = text.str();
    return r;
}

CommandResult cmd_decompose(const Options& opt) {
    CommandResult r = make("decompose", opt);
    const IntMatrix a = read_matrix_file(opt.file);
    GeneratorWord w(a.dim());
    try {
        if (opt.target == "gamma2")
            w = decompose_gamma2(a);
        else if (opt.target == "gamman")
            w = decompose_gamma_n(a);
        else if (opt.target == "sln")
            w = decompose_sln(a);
        else
            throw InputError("--target must be gamma2, gamman or sln");
    } catch (const MembershipError& e) {
        r.payload["target"] = opt.target;
        r.payload["member"] = false;
        r.payload["reason"] = e.what();
        r.text = std::string("non-member: ") + e.what() + "\n";
        r.status = Status::non_member;
        return r;
    }
    if (!opt.no_verify && !(word_to_matrix(w) == a)) throw VerificationError("word does not re-multiply to A");
    r.payload["target"] = opt.target;
    r.payload["member"] = true;
    r.payload["word"] = to_string(w);
    r.payload["letters"] = w.letters().size();
    r.payload["verification"] = verification_tag(opt);
    r.text = to_string(w) + "\n" + verification_tag(opt) + "\n";
    return r;
}

CommandResult cmd_verify_identities(const Options& opt) {
    CommandResult r = make("verify-identities", opt);
    const auto reports = verify_identities(opt.n);
    Json families = Json::array();
    std::ostringstream text;
    for (const auto& f : reports) {
        const std::string verdict = f.verified() ? "VERIFIED" : "CORRECTED(" + to_string(*f.correction) + ")";
        Json j;
        j["table"] = f.which.table;
        j["case"] = f.which.index;
        j["description"] = describe(f.which);
        j["tuples"] = f.tuples_checked;
        j["verdict"] = verdict;
        families.push_back(std::move(j));
        text << "table " << f.which.table << " case " << f.which.index << "  " << describe(f.which) << "  "
             << f.tuples_checked << " tuples  " << verdict << "\n";
    }
    r.payload["n"] = opt.n;
    r.payload["families"] = std::move(families);
    r.text = text.str();
    return r;
}

CommandResult cmd_obstruction(const Options& opt) {
    CommandResult r = make("obstruction", opt);
    const IntMatrix a = read_matrix_file(opt.file);
    const KClass kc = k_class(opt);
    const auto rep = classify(a, kc);
    Json pairs = Json::array();
    std::ostringstream text;
    for (const auto& p : rep.pairs) {
        Json j;
        j["pair"] = {p.j, p.l};
        Json diag = Json::array();
        for (const auto& d : p.diag) diag.push_back(integer_json(d));
        j["diagonal"] = std::move(diag);
        Json cross = Json::array();
        for (const auto& [st, v] : p.cross) cross.push_back({{"s", st.first}, {"t", st.second}, {"coeff", integer_json(v)}});
        j["cross"] = std::move(cross);
        pairs.push_back(std::move(j));
        text << "pair (" << p.j << "," << p.l << ") diagonal:";
        for (const auto& d : p.diag) text << ' ' << d;
        text << "\n";
    }
    Json witnesses = Json::array();
    for (const auto& w : rep.witnesses) {
        witnesses.push_back({{"pair", {w.j, w.l}}, {"s", w.s}});
        text << "blocked by pair (" << w.j << "," << w.l << ") at s = " << w.s << "\n";
    }
    r.payload["k_class"] = to_string(kc);
    r.payload["pairs"] = std::move(pairs);
    r.payload["witnesses"] = std::move(witnesses);
    r.payload["verdict"] = rep.realizable() ? "realizable" : "blocked";
    text << (rep.realizable() ? "realizable" : "blocked") << "\n";
    r.text = text.str();
    r.status = rep.realizable() ? Status::ok : Status::non_member;
    return r;
}

std::vector<ResidueMatrix> residue_generators(const std::string& file, std::size_t n, std::uint32_t m) {
    std::vector<ResidueMatrix> out;
    for (const auto& a : read_matrices_file(file)) {
        if (a.dim() != n) throw InputError("generator dimension does not match -n");
        out.push_back(reduce_mod(a, m));
    }
    if (out.empty()) throw InputError("generator file holds no matrices");
    return out;
}

FiniteGroupTable ambient_group(const Options& opt, std::uint32_t m) {
    if (opt.n < 1) throw InputError("-n must be positive");
    const auto gens =
        opt.group_file.empty() ? elementary_generators(opt.n, m) : residue_generators(opt.group_file, opt.n, m);
    return enumerate_group(gens, opt.n, m);
}

CommandResult cmd_enumerate(const Options& opt) {
    CommandResult r = make("enumerate", opt);
    const std::uint32_t m = small_modulus(opt);
    if (opt.n < 1) throw InputError("-n must be positive");
    const auto gens = opt.generators_file.empty() ? elementary_generators(opt.n, m)
                                                  : residue_generators(opt.generators_file, opt.n, m);
    const auto g = enumerate_group(gens, opt.n, m);
    r.payload["n"] = opt.n;
    r.payload["mod"] = m;
    r.payload["generators"] = gens.size();
    r.payload["order"] = g.order();
    r.text = "order " + std::to_string(g.order()) + "\n";
    return r;
}

CommandResult cmd_normality(const Options& opt) {
    CommandResult r = make("normality", opt);
    const std::uint32_t m = small_modulus(opt);
    const auto g = ambient_group(opt, m);
    const auto h = enumerate_group(residue_generators(opt.subgroup_file, opt.n, m), opt.n, m);
    const auto res = is_normal(h, g);
    r.payload["n"] = opt.n;
    r.payload["mod"] = m;
    r.payload["group_order"] = g.order();
    r.payload["subgroup_order"] = h.order();
    r.payload["normal"] = res.normal;
    std::ostringstream text;
    text << (res.normal ? "normal" : "not normal") << " (|H| = " << h.order() << ", |G| = " << g.order() << ")\n";
    if (res.violation) {
        const auto& [x, y] = *res.violation;
        const auto conj = x * y * x.inverse();
        r.payload["violation"] = {{"g", residue_json(x)}, {"h", residue_json(y)}, {"conjugate", residue_json(conj)}};
        text << "g = " << residue_text(x) << "\nh = " << residue_text(y) << "\ng h g^-1 = " << residue_text(conj)
             << " is not in H\n";
    }
    r.text = text.str();
    r.status = res.normal ? Status::ok : Status::non_member;
    return r;
}

CommandResult cmd_quat_witness(const Options& opt) {
    CommandResult r = make("quat-witness", opt);
    const auto w = quaternion_witness();
    r.payload["matrix"] = matrix_json(IntMatrix{{1, -1}, {-1, 2}});
    r.payload["first"] = tuple_json(w.first);
    r.payload["second"] = tuple_json(w.second);
    r.payload["image_first"] = tuple_json(w.image_first);
    r.payload["image_second"] = tuple_json(w.image_second);
    r.payload["error"] = w.error;
    r.payload["separation"] = w.separation;
    r.payload["confirmed"] = w.confirmed();
    std::ostringstream text;
    text.precision(3);
    text << "both points map to (i, i): max error " << w.error << ", preimage distance " << w.separation << "\n"
         << (w.confirmed() ? "confirmed" : "NOT confirmed") << "\n";
    r.text = text.str();
    r.status = w.confirmed() ? Status::ok : Status::verification_failure;
    return r;
}

CommandResult cmd_degree(const Options& opt) {
    CommandResult r = make("degree", opt);
    if (!opt.k || *opt.k < 1) throw InputError("degree needs --k K with K >= 1");
    const auto k = static_cast<std::size_t>(*opt.k);
    SphereMap map;
    long expected = 0;
    const long parity = (k + 1) % 2 == 0 ? 1 : -1;
    if (opt.map_name == "psi") {
        std::vector<double> x(k + 1, 0.0);
        x[0] = 1.0;
        map = psi_map(HyperPoint(std::move(x)));
        expected = parity + 1;
    } else if (opt.map_name == "antipodal") {
        map = antipodal_map();
        expected = parity;
    } else {
        throw InputError("--map must be psi or antipodal");
    }
    const auto est = degree_estimate(map, k, opt.samples, opt.seed);
    r.payload["map"] = opt.map_name;
    r.payload["k"] = k;
    r.payload["samples"] = est.samples;
    r.payload["seed"] = opt.seed;
    r.payload["estimate"] = est.estimate;
    r.payload["standard_error"] = est.standard_error;
    r.payload["rounded"] = std::lround(est.estimate);
    r.payload["expected"] = expected;
    std::ostringstream text, diag;
    text << "degree estimate " << est.estimate << " (se " << est.standard_error << "), expected " << expected << "\n";
    diag << "degree: " << est.samples << " samples in " << kDegreePartitions << " partitions, seed " << opt.seed
         << "\n";
    r.text = text.str();
    r.diagnostics = diag.str();
    return r;
}

CommandResult cmd_induced(const Options& opt) {
    CommandResult r = make("induced", opt);
    const IntMatrix a = read_matrix_file(opt.file);
    const IntMatrix measured = induced_matrix_on_torus(p_a_torus_map(a), a.dim(), opt.resolution);
    r.payload["matrix"] = matrix_json(a);
    r.payload["measured"] = matrix_json(measured);
    r.payload["resolution"] = opt.resolution;
    r.payload["match"] = measured == a;
    std::ostringstream text;
    text << "measured " << measured << "\n" << (measured == a ? "match" : "MISMATCH") << "\n";
    r.text = text.str();
    r.status = measured == a ? Status::ok : Status::verification_failure;
    return r;
}

CommandResult cmd_ledger(const Options& opt) {
    CommandResult r = make("ledger", opt);
    const auto entries = discrepancy_ledger();
    Json list = Json::array();
    for (const auto& e : entries)
        list.push_back({{"topic", e.topic},
                        {"stated", e.stated},
                        {"adopted", e.adopted},
                        {"evidence", e.evidence},
                        {"confirmed", e.confirmed}});
    r.payload["entries"] = std::move(list);
    r.text = render_ledger(entries);
    return r;
}

CommandResult error_result(const std::string& command, Status status, const std::string& message, bool json) {
    CommandResult r;
    r.json_output = json;
    r.status = status;
    r.payload["schema"] = kSchemaVersion;
    r.payload["command"] = command;
    r.payload["error"] = message;
    r.diagnostics = "error: " + message + "\n";
    return r;
}

}  // namespace

std::string CommandResult::output() const { return json_output ? payload.dump(2) + "\n" : text; }

CommandResult run(const std::vector<std::string>& args) {
    Options opt;
    CLI::App app{"Exact and numerical tools for self-maps of products of spheres", "sphereprod"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", opt.seed, "Random seed");
    app.add_option("--samples", opt.samples, "Monte-Carlo sample count");
    app.add_option("-m,--mod", opt.mod, "Modulus");
    app.add_option("--k", opt.k, "Sphere dimension k");
    app.add_option("--k-class", opt.k_class, "Realizability class")
        ->check(CLI::IsMember({"hopf", "odd", "odd_generic", "even"}));
    app.add_flag("--no-verify", opt.no_verify, "Skip re-verification of printed certificates");

    auto* member = app.add_subcommand("member", "Membership in Gamma_n(m), W_n(2) or hR(k,n)");
    member->add_option("--group", opt.group)->required()->check(CLI::IsMember({"gamma", "w2", "hr"}));
    member->add_option("file", opt.file)->required();

    auto* coset = app.add_subcommand("coset", "Coset certificate of a W_n(2) element");
    coset->add_option("file", opt.file)->required();

    auto* decompose = app.add_subcommand("decompose", "Word decomposition with re-multiplication check");
    decompose->add_option("--target", opt.target)->required()->check(CLI::IsMember({"gamma2", "gamman", "sln"}));
    decompose->add_option("file", opt.file)->required();

    auto* verify = app.add_subcommand("verify-identities", "Check the conjugation tables exhaustively");
    verify->add_option("-n", opt.n)->required();

    auto* obstruction = app.add_subcommand("obstruction", "Whitehead-product obstruction per row pair");
    obstruction->add_option("file", opt.file)->required();

    auto* enumerate = app.add_subcommand("enumerate", "Order of a finite matrix group");
    enumerate->add_option("-n", opt.n)->required();
    enumerate->add_option("--generators", opt.generators_file);

    auto* normality = app.add_subcommand("normality", "Normality of a subgroup of SL_n(Z/m)");
    normality->add_option("-n", opt.n)->required();
    normality->add_option("--subgroup", opt.subgroup_file)->required();
    normality->add_option("--group", opt.group_file);

    auto* quat = app.add_subcommand("quat-witness", "Non-injectivity witness for a quaternionic monomial map");

    auto* degree = app.add_subcommand("degree", "Monte-Carlo mapping degree");
    degree->add_option("--map", opt.map_name)->required()->check(CLI::IsMember({"psi", "antipodal"}));

    auto* induced = app.add_subcommand("induced", "Winding-number matrix of P_A on the torus");
    induced->add_option("--matrix", opt.file)->required();
    induced->add_option("--resolution", opt.resolution);

    auto* ledger = app.add_subcommand("ledger", "Recompute the discrepancy ledger");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CommandResult r;
        r.json_output = false;
        r.text = app.help();
        return r;
    } catch (const CLI::ParseError& e) {
        CommandResult r = error_result("", Status::input_error, e.what(), false);
        r.text = app.help();
        return r;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    const bool json = opt.format == "json";
    try {
        if (chosen == member) return cmd_member(opt);
        if (chosen == coset) return cmd_coset(opt);
        if (chosen == decompose) return cmd_decompose(opt);
        if (chosen == verify) return cmd_verify_identities(opt);
        if (chosen == obstruction) return cmd_obstruction(opt);
        if (chosen == enumerate) return cmd_enumerate(opt);
        if (chosen == normality) return cmd_normality(opt);
        if (chosen == quat) return cmd_quat_witness(opt);
        if (chosen == degree) return cmd_degree(opt);
        if (chosen == induced) return cmd_induced(opt);
        if (chosen == ledger) return cmd_ledger(opt);
        return error_result(name, Status::input_error, "unknown subcommand", json);
    } catch (const InputError& e) {
        return error_result(name, Status::input_error, e.what(), json);
    } catch (const MembershipError& e) {
        return error_result(name, Status::non_member, e.what(), json);
    } catch (const Error& e) {
        return error_result(name, Status::verification_failure, e.what(), json);
    } catch (const std::exception& e) {
        return error_result(name, Status::verification_failure, e.what(), json);
    }
}

}  // namespace sphereprod::cli

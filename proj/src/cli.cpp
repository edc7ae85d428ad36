#include "symfano/cli.hpp"

#include "symfano/bundle.hpp"
#include "symfano/delpezzo.hpp"
#include "symfano/document.hpp"
#include "symfano/errors.hpp"
#include "symfano/fano.hpp"
#include "symfano/oracle.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace symfano {

namespace {

using nlohmann::json;

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FanDocument load(const std::string& path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            fail(Errc::MalformedInput, "cannot read " + path);
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_document(text);
}

json indices(const IndexSet& s)
{
    json a = json::array();
    for (auto i : s) {
        a.push_back(i);
    }
    return a;
}

json integer_json(const Integer& x)
{
    if (x.fits_slong_p() && sizeof(long) >= 8) {
        return x.get_si();
    }
    return x.get_str();
}

json relation_json(const PrimitiveRelation& r)
{
    json coeffs = json::array();
    for (const auto& c : r.target_coeffs) {
        coeffs.push_back(integer_json(c));
    }
    return {{"collection", indices(r.collection)},
            {"target_support", indices(r.target_support)},
            {"target_coeffs", coeffs},
            {"degree", integer_json(r.degree)}};
}

std::optional<PrimitiveRelation> lowest_degree(const Fan& f)
{
    std::optional<PrimitiveRelation> best;
    for (auto& r : primitive_relations(f)) {
        if (!best || r.degree < best->degree) {
            best = std::move(r);
        }
    }
    return best;
}

int cmd_check(const std::string& path, bool verify, bool fast, bool as_json, std::ostream& out)
{
    const auto doc = load(path);
    const Fan& f = doc.fan;
    const auto report = validate_fan(f, fast);
    const bool valid = report.is_fan && report.is_smooth && report.is_complete;
    std::optional<bool> fano;
    std::optional<PrimitiveRelation> witness;
    if (valid) {
        fano = is_fano(f);
        if (!*fano) {
            witness = lowest_degree(f);
        }
    }

    bool agree = true;
    json oracle_json = json::object();
    std::ostringstream oracle_text;
    if (verify) {
        if (f.dim() <= 4) {
            const bool hull = oracle::brute_force_fano(f);
            const bool ok = hull == fano.value_or(false);
            agree = agree && ok;
            oracle_json["fano"] = hull;
            oracle_text << "oracle fano " << mark(hull) << (ok ? " (agrees)" : " (DISAGREES)") << '\n';
        } else {
            oracle_text << "oracle fano skipped (dim > 4)\n";
        }
        if (f.num_generators() <= 16 && valid) {
            const bool ok = oracle::brute_force_primitive_collections(f) == primitive_collections(f);
            agree = agree && ok;
            oracle_json["primitive_collections_agree"] = ok;
            oracle_text << "oracle primitive collections " << (ok ? "agree" : "DISAGREE") << '\n';
        } else {
            oracle_text << "oracle primitive collections skipped\n";
        }
    }

    if (as_json) {
        json j{{"fan", report.is_fan}, {"smooth", report.is_smooth}, {"complete", report.is_complete}};
        j["fano"] = fano ? json(*fano) : json(nullptr);
        if (!report.detail.empty()) {
            j["detail"] = report.detail;
        }
        if (witness) {
            j["witness"] = relation_json(*witness);
        }
        if (verify) {
            j["oracle"] = oracle_json;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "fan " << mark(report.is_fan) << " smooth " << mark(report.is_smooth) << " complete "
            << mark(report.is_complete) << " fano ";
        if (!fano) {
            out << "- (not a smooth complete fan)";
        } else if (*fano) {
            out << mark(true);
        } else if (witness && witness->degree <= 0) {
            out << mark(false) << " (degree-" << witness->degree << " primitive collection "
                << to_string(witness->collection) << ')';
        } else {
            out << mark(false);
        }
        out << '\n';
        if (!report.detail.empty()) {
            out << report.detail << '\n';
        }
        out << oracle_text.str();
    }
    return valid && fano.value_or(false) && agree ? ExitOk : ExitFailure;
}

int cmd_relations(const std::string& path, bool as_json, std::ostream& out)
{
    const auto doc = load(path);
    const auto rels = primitive_relations(doc.fan);
    if (as_json) {
        json a = json::array();
        for (const auto& r : rels) {
            a.push_back(relation_json(r));
        }
        out << a.dump(2) << '\n';
    } else {
        for (const auto& r : rels) {
            out << to_string(r.collection) << "  " << to_string(r) << "  degree " << r.degree << '\n';
        }
    }
    return ExitOk;
}

std::string factors_text(const std::vector<FactorDescriptor>& fs)
{
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        s += (i ? " x " : "") + to_string(fs[i]);
    }
    return s;
}

std::string gens_text(const std::vector<std::size_t>& local_to_global)
{
    std::string s;
    for (std::size_t i = 0; i < local_to_global.size(); ++i) {
        s += (i ? " " : "") + std::string("g") + std::to_string(local_to_global[i]);
    }
    return s;
}

json bundle_json(const BundleStructure& b)
{
    return {{"fiber_dim", b.fiber.dim()},
            {"fiber_generators", b.fiber_generator_map},
            {"fiber_cones", b.fiber.max_cones().size()},
            {"base_dim", b.base.dim()},
            {"base_generators", b.base_generator_map},
            {"base_cones", b.base.max_cones().size()},
            {"trivial", b.trivial}};
}

int cmd_decompose(const std::string& path, bool as_json, std::ostream& out)
{
    const auto doc = load(path);
    const auto rep = structure_report(doc.fan);
    const std::string kind(1, to_char(rep.kind));
    if (as_json) {
        json j{{"case", kind}, {"num_pairs", rep.num_pairs}, {"h_dim", rep.h_dim}};
        if (rep.decomposition) {
            const auto& d = *rep.decomposition;
            json pairs = json::array();
            for (const auto& p : d.pairs.pairs) {
                pairs.push_back({p.first, p.second});
            }
            j["pairs"] = pairs;
            json dp = json::array();
            for (const auto& c : d.del_pezzo) {
                dp.push_back({{"dim", c.dim}, {"generators", c.local_to_global()}});
            }
            json pdp = json::array();
            for (const auto& c : d.pseudo) {
                pdp.push_back({{"dim", c.dim}, {"generators", c.local_to_global()}});
            }
            j["del_pezzo"] = dp;
            j["pseudo_del_pezzo"] = pdp;
            j["free_generators"] = d.free_generators();
        }
        if (rep.factors) {
            json fs = json::array();
            for (const auto& fd : *rep.factors) {
                fs.push_back(to_string(fd));
            }
            j["factors"] = fs;
        }
        if (rep.bundle) {
            j["bundle"] = bundle_json(*rep.bundle);
        }
        if (rep.normal_form) {
            j["normal_form"] = {{"v", rep.normal_form->v},
                                {"w", rep.normal_form->w},
                                {"relation", relation_json(rep.normal_form->relation)},
                                {"r", rep.normal_form->free_support + rep.normal_form->component_support},
                                {"odd", rep.normal_form->odd}};
        }
        out << j.dump(2) << '\n';
        return ExitOk;
    }

    if (rep.num_pairs == 0) {
        out << "no symmetric pairs; theorem not applicable\ncase E\n";
        return ExitOk;
    }
    const auto& d = *rep.decomposition;
    out << "symmetric pairs: " << rep.num_pairs << '\n';
    for (const auto& p : d.pairs.pairs) {
        out << "  g" << p.first << " = -g" << p.second << '\n';
    }
    out << "dim H = " << rep.h_dim << " of " << doc.fan.dim() << '\n';
    for (const auto& c : d.del_pezzo) {
        out << "del Pezzo component h=" << c.dim << ": " << gens_text(c.local_to_global()) << '\n';
    }
    for (const auto& c : d.pseudo) {
        out << "pseudo del Pezzo component h~=" << c.dim << ": " << gens_text(c.local_to_global()) << '\n';
    }
    if (!d.free_pairs.empty()) {
        out << "free pairs: " << d.free_pairs.size() << '\n';
    }
    out << "case " << kind;
    switch (rep.kind) {
    case StructureCase::D:
        out << "; X = " << factors_text(*rep.factors) << '\n';
        break;
    case StructureCase::C: {
        const auto& nf = *rep.normal_form;
        out << ": bundle over P^1, fiber dim " << rep.bundle->fiber.dim() << ", relation "
            << to_string(nf.relation) << ", r = " << nf.free_support + nf.component_support
            << (nf.odd ? " (odd)" : " (even)") << '\n';
        break;
    }
    case StructureCase::A:
        out << ": bundle with del Pezzo product fiber\n";
        break;
    case StructureCase::B:
        out << ": X' is a bundle with block product fiber\n";
        break;
    case StructureCase::E:
        out << '\n';
        break;
    }
    if (rep.bundle) {
        const auto& b = *rep.bundle;
        out << "fiber: dim " << b.fiber.dim() << ", " << b.fiber.num_generators() << " generators, "
            << b.fiber.max_cones().size() << " cones\n";
        out << "base: dim " << b.base.dim() << ", " << b.base.num_generators() << " generators, "
            << b.base.max_cones().size() << " cones" << (b.trivial ? ", trivial bundle" : "") << '\n';
    }
    return ExitOk;
}

std::size_t even_dimension(const std::string& text)
{
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("expected a dimension, got '" + text + "'");
    }
    if (pos != text.size() || v == 0) {
        throw UsageError("expected a positive dimension, got '" + text + "'");
    }
    return v;
}

FactorDescriptor parse_factor(const std::string& token)
{
    const auto colon = token.find(':');
    const std::string kind = token.substr(0, colon);
    if (kind == "p1") {
        if (colon != std::string::npos) {
            throw UsageError("p1 takes no dimension");
        }
        return {FactorKind::ProjLine, 1};
    }
    if (colon == std::string::npos || (kind != "delpezzo" && kind != "pseudo")) {
        throw UsageError("factor must be delpezzo:N, pseudo:N or p1, got '" + token + "'");
    }
    const auto n = even_dimension(token.substr(colon + 1));
    if (n % 2 != 0) {
        throw UsageError("del Pezzo dimension must be even, got " + std::to_string(n));
    }
    return {kind == "delpezzo" ? FactorKind::DelPezzo : FactorKind::PseudoDelPezzo, n};
}

int cmd_construct(const std::vector<std::string>& words, std::ostream& out)
{
    if (words.empty()) {
        throw UsageError("construct needs a name: delpezzo N | pseudo N | p1power K | product F...");
    }
    const std::string& what = words[0];
    std::vector<FactorDescriptor> factors;
    if (what == "delpezzo" || what == "pseudo") {
        if (words.size() != 2) {
            throw UsageError(what + " takes one dimension");
        }
        factors.push_back(parse_factor(what + ":" + words[1]));
    } else if (what == "p1power") {
        if (words.size() != 2) {
            throw UsageError("p1power takes one exponent");
        }
        factors.assign(even_dimension(words[1]), FactorDescriptor{FactorKind::ProjLine, 1});
    } else if (what == "product") {
        if (words.size() < 2) {
            throw UsageError("product needs at least one factor");
        }
        for (std::size_t i = 1; i < words.size(); ++i) {
            factors.push_back(parse_factor(words[i]));
        }
    } else {
        throw UsageError("unknown fan name '" + what + "'");
    }
    std::string name;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        name += (i ? " x " : "") + to_string(factors[i]);
    }
    out << print_document({fan_of_factors(factors), name});
    return ExitOk;
}

int cmd_xprime(const std::string& path, std::ostream& out)
{
    const auto doc = load(path);
    Fan xp = construct_x_prime(doc.fan);
    if (!verify_birational_codim1(doc.fan, xp)) {
        fail(Errc::InternalInconsistency, "X' changed the generator set");
    }
    out << print_document({std::move(xp), doc.name});
    return ExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Smooth complete toric fans: checks, primitive relations and symmetric structure"};
    app.require_subcommand(1);

    std::string path;
    bool verify = false, fast = false, as_json = false;
    std::vector<std::string> words;

    auto* check = app.add_subcommand("check", "Check fan, smoothness, completeness and the Fano property");
    check->add_option("path", path, "Fan document, - for stdin")->required();
    check->add_flag("--verify", verify, "Cross-check with the brute-force oracles");
    check->add_flag("--fast", fast, "Skip the pairwise fan-axiom check");
    check->add_flag("--json", as_json, "Machine-readable output");

    auto* relations = app.add_subcommand("relations", "List primitive collections and their relations");
    relations->add_option("path", path, "Fan document, - for stdin")->required();
    relations->add_flag("--json", as_json, "Machine-readable output");

    auto* decompose_cmd = app.add_subcommand("decompose", "Symmetric pairs, blocks and structure case");
    decompose_cmd->add_option("path", path, "Fan document, - for stdin")->required();
    decompose_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto* construct = app.add_subcommand("construct", "Print a named fan: delpezzo N | pseudo N | p1power K | "
                                                      "product F... (F = delpezzo:N, pseudo:N or p1)");
    construct->add_option("name", words, "Name and parameters")->required();

    auto* xprime = app.add_subcommand("xprime", "Print the fan X' with the same generators");
    xprime->add_option("path", path, "Fan document, - for stdin")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitOk : ExitUsage;
    }

    try {
        if (check->parsed()) {
            return cmd_check(path, verify, fast, as_json, out);
        }
        if (relations->parsed()) {
            return cmd_relations(path, as_json, out);
        }
        if (decompose_cmd->parsed()) {
            return cmd_decompose(path, as_json, out);
        }
        if (construct->parsed()) {
            return cmd_construct(words, out);
        }
        return cmd_xprime(path, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return ExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::MalformedInput ? ExitUsage : ExitFailure;
    }
}

} // namespace symfano

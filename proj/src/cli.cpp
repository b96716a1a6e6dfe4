#include "rht/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rht/massey.hpp"
#include "rht/model_io.hpp"
#include "rht/sullivan.hpp"
#include "rht/topology.hpp"

namespace rht {

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ParsedModel load_model(const std::string& path, bool strict, std::ostream& err) {
    ParsedModel parsed = parse_model(read_input(path), strict);
    for (const std::string& w : parsed.warnings) err << "warning: " << w << "\n";
    return parsed;
}

int default_max_degree(const Cdga& model) {
    return 3 * model.algebra().top_generator_degree() + 2;
}

json betti_json(const Cdga& model, const CohomologyBasis& basis) {
    json rows = json::array();
    for (int d = 0; d <= basis.max_degree(); ++d) {
        json row;
        row["degree"] = d;
        row["rank"] = basis.betti(d);
        json reps = json::array();
        for (int i = 0; i < basis.betti(d); ++i) reps.push_back(model.algebra().format(basis.rep_element(d, i)));
        row["classes"] = reps;
        rows.push_back(row);
    }
    return rows;
}

json table_json(const BettiTable& t) {
    json rows = json::array();
    for (int d = 0; d <= t.top; ++d) {
        json row;
        row["degree"] = d;
        row["rank"] = t.betti(d);
        json labels = json::array();
        if (auto it = t.classes.find(d); it != t.classes.end())
            for (const ClassLabel& l : it->second) labels.push_back(l.text());
        row["classes"] = labels;
        rows.push_back(row);
    }
    return rows;
}

json massey_json(const Cdga& model, const MasseyResult& r) {
    json m;
    m["degrees"] = {r.a1.degree, r.a2.degree, r.a3.degree};
    m["verdict"] = to_string(r.verdict);
    if (r.verdict != MasseyVerdict::Undefined) {
        m["representative"] = model.algebra().format(r.representative);
        json coords = json::array();
        for (const Rational& c : r.rep_class) coords.push_back(rational_str(c));
        m["representative_class"] = coords;
        m["indeterminacy_rank"] = r.indeterminacy.rows();
        m["primitive_xi"] = model.algebra().format(r.primitive_xi);
        m["primitive_eta"] = model.algebra().format(r.primitive_eta);
        m["nonformal"] = r.implies_nonformal();
    }
    return m;
}

void emit(std::ostream& out, bool as_json, const json& doc, const std::string& text) {
    if (as_json) {
        out << doc.dump(2) << "\n";
    } else {
        out << text;
    }
}

std::string render_betti_text(const json& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        if (row["rank"].get<int>() == 0) continue;
        out << "  H^" << row["degree"].get<int>() << ": rank " << row["rank"].get<int>() << "  [";
        bool first = true;
        for (const auto& c : row["classes"]) {
            if (!first) out << ", ";
            out << c.get<std::string>();
            first = false;
        }
        out << "]\n";
    }
    return out.str();
}

struct CommonFlags {
    std::string model_path;
    int max_degree = -1;
    bool strict = false;
    bool as_json = false;
};

int cmd_validate(const CommonFlags& f, std::ostream& out, std::ostream& err) {
    ParsedModel parsed = load_model(f.model_path, f.strict, err);
    ValidationReport report = parsed.model.validate(true);
    json doc;
    doc["command"] = "validate";
    doc["verdict"] = "valid";
    doc["strict"] = f.strict;
    doc["minimal"] = report.valid_strict();
    json warnings = json::array();
    for (const std::string& w : parsed.warnings) warnings.push_back(w);
    doc["warnings"] = warnings;
    std::ostringstream text;
    text << "valid model (" << parsed.model.algebra().generator_count() << " generators)"
         << (report.valid_strict() ? ", minimal" : ", not minimal") << "\n";
    emit(out, f.as_json, doc, text.str());
    return 0;
}

int cmd_cohomology(const CommonFlags& f, std::ostream& out, std::ostream& err) {
    ParsedModel parsed = load_model(f.model_path, f.strict, err);
    const int bound = f.max_degree >= 0 ? f.max_degree : default_max_degree(parsed.model);
    CohomologyBasis basis(parsed.model, bound);
    json doc;
    doc["command"] = "cohomology";
    doc["bound"] = bound;
    if (!parsed.model.truncation_note().empty()) doc["note"] = parsed.model.truncation_note();
    doc["betti"] = betti_json(parsed.model, basis);
    std::ostringstream text;
    text << "cohomology through degree " << bound << "\n" << render_betti_text(doc["betti"]);
    emit(out, f.as_json, doc, text.str());
    return 0;
}

int cmd_massey(const CommonFlags& f, const std::string& classes_arg, std::ostream& out,
               std::ostream& err) {
    ParsedModel parsed = load_model(f.model_path, f.strict, err);
    const Cdga& model = parsed.model;

    std::vector<std::string> exprs;
    std::string current;
    for (char c : classes_arg) {
        if (c == ',') {
            exprs.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    exprs.push_back(current);
    if (exprs.size() != 3) throw ArgumentError("--classes expects exactly three expressions");

    const int bound = f.max_degree >= 0 ? f.max_degree : default_max_degree(model);
    CohomologyBasis basis(model, bound);
    std::vector<CohomologyClass> cls;
    for (const std::string& e : exprs) {
        Element elem = parse_expression(model, e);
        if (elem.is_zero() || !elem.homogeneous_degree())
            throw ArgumentError("class expression must be nonzero and homogeneous: " + e);
        if (!model.apply_d(elem).is_zero())
            throw ArgumentError("class expression is not closed: " + e);
        cls.push_back(basis.class_of(model, elem));
    }

    MasseyResult r = triple_massey(model, basis, cls[0], cls[1], cls[2]);
    json doc;
    doc["command"] = "massey";
    doc["classes"] = exprs;
    doc["bound"] = bound;
    doc["massey"] = massey_json(model, r);
    doc["verdict"] = to_string(r.verdict);

    std::ostringstream text;
    text << "massey <" << exprs[0] << ", " << exprs[1] << ", " << exprs[2] << ">\n";
    text << "  degrees: (" << r.a1.degree << ", " << r.a2.degree << ", " << r.a3.degree << ")\n";
    text << "  verdict: " << to_string(r.verdict) << "\n";
    if (r.verdict != MasseyVerdict::Undefined) {
        text << "  representative: " << model.algebra().format(r.representative) << "\n";
        text << "  indeterminacy rank: " << r.indeterminacy.rows() << "\n";
        text << "  primitives: xi = " << model.algebra().format(r.primitive_xi)
             << ", eta = " << model.algebra().format(r.primitive_eta) << "\n";
        if (r.implies_nonformal()) text << "  non-formal: a nonzero Massey product obstructs formality\n";
    }
    text << "  bound: " << bound << "\n";
    emit(out, f.as_json, doc, text.str());
    return 0;
}

int cmd_minimal_model(const CommonFlags& f, std::ostream& out, std::ostream& err) {
    ParsedModel parsed = load_model(f.model_path, f.strict, err);
    const int bound = f.max_degree >= 0 ? f.max_degree : default_max_degree(parsed.model);
    MinimalModelStage stage = minimal_model(parsed.model, bound);
    json doc;
    doc["command"] = "minimal-model";
    doc["bound"] = bound;
    doc["built_through"] = stage.built_through;
    doc["model"] = emit_model(stage.model);
    json phi;
    for (int i = 0; i < stage.model.algebra().generator_count(); ++i)
        phi[stage.model.algebra().generator(i).name] =
            stage.target.algebra().format(stage.phi.images[i]);
    doc["morphism"] = phi;
    std::ostringstream text;
    text << "# built through degree " << stage.built_through << "\n" << emit_model(stage.model);
    for (int i = 0; i < stage.model.algebra().generator_count(); ++i)
        text << "# phi(" << stage.model.algebra().generator(i).name
             << ") = " << stage.target.algebra().format(stage.phi.images[i]) << "\n";
    emit(out, f.as_json, doc, text.str());
    return 0;
}

int cmd_sformal(const CommonFlags& f, int s, int bound_flag, std::ostream& out, std::ostream& err) {
    ParsedModel parsed = load_model(f.model_path, f.strict, err);
    const Cdga& model = parsed.model;
    int bound = bound_flag;
    if (bound < 0)
        bound = model.faithful_through() ? *model.faithful_through() : default_max_degree(model);

    MinimalModelStage stage = model.validate(true).valid_strict()
                                  ? identity_stage(model, s)
                                  : minimal_model(model, s + 1);
    SFormalityReport report = s_formality(stage, s, bound);
    json doc;
    doc["command"] = "sformal";
    doc["s"] = s;
    doc["bound"] = bound;
    doc["verdict"] = report.pass ? "pass" : "fail";
    if (report.witness) {
        doc["witness"] = stage.model.algebra().format(*report.witness);
        doc["witness_degree"] = report.witness_degree;
    }
    doc["semantics"] = report.semantics;
    std::ostringstream text;
    text << "s-formality at s = " << s << ": " << (report.pass ? "pass" : "fail") << "\n";
    if (report.witness)
        text << "  witness (degree " << report.witness_degree
             << "): " << stage.model.algebra().format(*report.witness) << "\n";
    text << "  searched through degree " << bound << " (" << report.semantics << ")\n";
    emit(out, f.as_json, doc, text.str());
    return 0;
}

int cmd_formality(const CommonFlags& f, int dim, std::ostream& out, std::ostream& err) {
    ParsedModel parsed = load_model(f.model_path, f.strict, err);
    const Cdga& model = parsed.model;
    const int s = (dim + 1) / 2 - 1;
    MinimalModelStage stage = model.validate(true).valid_strict()
                                  ? identity_stage(model, s)
                                  : minimal_model(model, s + 1);
    FormalityVerdict v = formality_verdict(stage, dim);
    json doc;
    doc["command"] = "formality";
    doc["n"] = dim;
    doc["s"] = v.s_used;
    doc["bound"] = v.report.search_bound;
    doc["verdict"] = v.formal ? "formal" : "non-formal";
    if (v.report.witness) {
        doc["witness"] = stage.model.algebra().format(*v.report.witness);
        doc["witness_degree"] = v.report.witness_degree;
    }
    std::ostringstream text;
    text << "formality for dimension " << dim << ": " << (v.formal ? "formal" : "non-formal")
         << " (s = " << v.s_used << ", bound " << v.report.search_bound << ")\n";
    if (v.report.witness)
        text << "  witness (degree " << v.report.witness_degree
             << "): " << stage.model.algebra().format(*v.report.witness) << "\n";
    emit(out, f.as_json, doc, text.str());
    return 0;
}

Fixture build_fixture(const std::string& which, int k) {
    if (which == "ck") return build_ck(k);
    if (which == "ckprime") return build_ckprime(k);
    throw ArgumentError("unknown fixture '" + which + "' (expected ck or ckprime)");
}

int cmd_fixture(const std::string& which, int k, bool as_json, std::ostream& out) {
    Fixture fx = build_fixture(which, k);
    json doc;
    doc["command"] = "fixture";
    doc["fixture"] = which;
    doc["k"] = k;
    doc["model"] = emit_model(fx.model);
    doc["betti"] = table_json(fx.table);
    if (fx.table.massey) {
        json m;
        m["degrees"] = {fx.table.massey->p1, fx.table.massey->p2, fx.table.massey->p3};
        m["classes"] = {fx.table.massey->a1, fx.table.massey->a2, fx.table.massey->a3};
        m["value"] = fx.table.massey->value;
        m["certified"] = fx.table.massey->certified;
        doc["massey"] = m;
    }
    if (fx.table.k1_caveat) doc["caveat"] = "k = 1 fixture is an algebraic object only";
    std::ostringstream text;
    text << "# " << fx.table.label << ": ranks";
    for (const auto& [d, labels] : fx.table.classes) {
        if (d == 0) continue;
        text << " b_" << d << "=" << labels.size();
    }
    text << "\n";
    if (fx.table.k1_caveat) text << "# caveat: k = 1 fixture is an algebraic object only\n";
    text << emit_model(fx.model);
    emit(out, as_json, doc, text.str());
    return 0;
}

int cmd_boundary(const std::string& which, int k, int n, bool as_json, std::ostream& out) {
    Fixture fx = build_fixture(which, k);
    LESCertificate cert = boundary_les(fx.table, n);
    const MasseyFlag& flag = *fx.table.massey;
    ObstructionCertificate transfer = transfer_massey(cert, flag.p1, flag.p2, flag.p3);
    BettiTable z = with_certified_massey(cert.z_table, transfer);

    json doc;
    doc["command"] = "boundary";
    doc["fixture"] = which;
    doc["k"] = k;
    doc["n"] = n;
    doc["betti"] = table_json(z);
    json les_rules = json::array();
    for (const LESRule& r : cert.rules) {
        json jr;
        jr["degree"] = r.degree;
        jr["pullback_rank"] = r.pullback_rank;
        jr["coboundary_rank"] = r.coboundary_rank;
        jr["note"] = r.j_note;
        les_rules.push_back(jr);
    }
    doc["rules"] = les_rules;
    auto summand_json = [](const SummandTrace& t) {
        json s;
        s["group_degree"] = t.group_degree;
        s["certified"] = t.certified;
        json rules = json::array();
        for (const auto& [label, rule] : t.generator_rules) rules.push_back({label, to_string(rule)});
        s["rules"] = rules;
        return s;
    };
    json tr;
    tr["certified"] = transfer.certified;
    tr["left"] = summand_json(transfer.left);
    tr["right"] = summand_json(transfer.right);
    doc["transfer"] = tr;
    doc["massey_certified"] = z.massey && z.massey->certified;

    std::ostringstream text;
    text << z.label << " (dimension " << n << ")\n";
    for (const auto& [d, labels] : z.classes) {
        text << "  H^" << d << ": rank " << labels.size() << "  [";
        for (size_t i = 0; i < labels.size(); ++i) text << (i ? ", " : "") << labels[i].text();
        text << "]\n";
    }
    text << "  massey transfer: " << (transfer.certified ? "certified" : "not certified") << "\n";
    for (const SummandTrace* t : {&transfer.left, &transfer.right}) {
        text << "    H^" << t->group_degree << ":";
        for (const auto& [label, rule] : t->generator_rules) text << " " << label << " -> " << to_string(rule) << ";";
        text << "\n";
    }
    emit(out, as_json, doc, text.str());
    return 0;
}

int cmd_geography(int n, int k, int b, bool as_json, std::ostream& out) {
    GeographyAnswer ans = geography(n, k, b);
    json doc;
    doc["command"] = "geography";
    doc["n"] = n;
    doc["k"] = k;
    doc["b"] = b;
    doc["verdict"] =
        ans.verdict == GeographyVerdict::NonformalExists ? "nonformal-exists" : "formal-forced";
    doc["tag"] = to_string(ans.tag);
    json recipe = json::array();
    for (const std::string& step : ans.recipe) recipe.push_back(step);
    doc["recipe"] = recipe;
    std::ostringstream text;
    text << "geography(n=" << n << ", k=" << k << ", b=" << b << "): " << doc["verdict"].get<std::string>()
         << "\n  " << to_string(ans.tag) << "\n";
    for (const std::string& step : ans.recipe) text << "  - " << step << "\n";
    emit(out, as_json, doc, text.str());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for graded models, Massey products and formality"};
    app.require_subcommand(1);

    CommonFlags flags;
    int s_flag = -1, bound_flag = -1, n_flag = -1, k_flag = -1, b_flag = -1;
    std::string classes_arg, fixture_kind;

    auto add_model_flags = [&](CLI::App* cmd, bool needs_model) {
        if (needs_model)
            cmd->add_option("model", flags.model_path, "model file ('-' for stdin)")->required();
        cmd->add_flag("--json", flags.as_json, "machine-readable report");
        cmd->add_flag("--strict-minimal", flags.strict, "reject non-minimal differentials");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a model file");
    add_model_flags(validate, true);

    CLI::App* cohomology = app.add_subcommand("cohomology", "graded cohomology ranks and classes");
    add_model_flags(cohomology, true);
    cohomology->add_option("--max-degree", flags.max_degree, "compute through this degree");

    CLI::App* massey = app.add_subcommand("massey", "triple Massey product");
    add_model_flags(massey, true);
    massey->add_option("--classes", classes_arg, "three class expressions, comma separated")->required();
    massey->add_option("--max-degree", flags.max_degree, "compute through this degree");

    CLI::App* minimal = app.add_subcommand("minimal-model", "stepwise minimal model");
    add_model_flags(minimal, true);
    minimal->add_option("--max-degree", flags.max_degree, "build through this degree");

    CLI::App* sformal = app.add_subcommand("sformal", "staged formality check");
    add_model_flags(sformal, true);
    sformal->add_option("--s", s_flag, "stage")->required();
    sformal->add_option("--bound", bound_flag, "search bound for closed ideal elements");

    CLI::App* formality = app.add_subcommand("formality", "formality verdict for a manifold dimension");
    add_model_flags(formality, true);
    formality->add_option("--n", n_flag, "manifold dimension")->required();

    CLI::App* fixture = app.add_subcommand("fixture", "emit a built-in fixture as a model file");
    fixture->add_option("kind", fixture_kind, "ck or ckprime")->required();
    fixture->add_option("--k", k_flag, "connectivity parameter")->required();
    fixture->add_flag("--json", flags.as_json, "machine-readable report");

    CLI::App* boundary = app.add_subcommand("boundary", "boundary-manifold rank bookkeeping");
    boundary->add_option("kind", fixture_kind, "ck or ckprime")->required();
    boundary->add_option("--k", k_flag, "connectivity parameter")->required();
    boundary->add_option("--n", n_flag, "boundary manifold dimension")->required();
    boundary->add_flag("--json", flags.as_json, "machine-readable report");

    CLI::App* geo = app.add_subcommand("geography", "existence of non-formal examples");
    geo->add_option("--n", n_flag, "manifold dimension")->required();
    geo->add_option("--k", k_flag, "connectivity parameter")->required();
    geo->add_option("--b", b_flag, "k-th Betti number")->required();
    geo->add_flag("--json", flags.as_json, "machine-readable report");

    std::vector<const char*> argv;
    argv.push_back("rht");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(flags, out, err);
        if (cohomology->parsed()) return cmd_cohomology(flags, out, err);
        if (massey->parsed()) return cmd_massey(flags, classes_arg, out, err);
        if (minimal->parsed()) return cmd_minimal_model(flags, out, err);
        if (sformal->parsed()) return cmd_sformal(flags, s_flag, bound_flag, out, err);
        if (formality->parsed()) return cmd_formality(flags, n_flag, out, err);
        if (fixture->parsed()) return cmd_fixture(fixture_kind, k_flag, flags.as_json, out);
        if (boundary->parsed()) return cmd_boundary(fixture_kind, k_flag, n_flag, flags.as_json, out);
        if (geo->parsed()) return cmd_geography(n_flag, k_flag, b_flag, flags.as_json, out);
    } catch (const Refusal& e) {
        err << "refused: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace rht

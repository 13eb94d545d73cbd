#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "tt/approximation.hpp"
#include "tt/coding.hpp"
#include "tt/triangular_tree.hpp"

using json = nlohmann::json;
using namespace tt;

namespace {

constexpr const char* kSchema = "tt-1";

const char* kind_name(PairKind k) {
    switch (k) {
        case PairKind::interior: return "interior";
        case PairKind::sigma: return "sigma";
        case PairKind::lambda: return "lambda";
        case PairKind::upsilon: return "upsilon";
        case PairKind::vertex: return "vertex";
    }
    return "?";
}

json mat_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

std::string mat_text(const Mat3& m) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        out += "[";
        for (int j = 0; j < 3; ++j) out += m.at(i, j).get_str() + (j < 2 ? " " : "");
        out += "]";
        if (i < 2) out += " ";
    }
    return out;
}

std::string iv_text(const Interval& a) { return format_interval(a, 20); }

json iv_json(const Interval& a) {
    return {{"lo", iv_lo(a).get_str()}, {"hi", iv_hi(a).get_str()}};
}

// Periodic cf notation: "[4,1]*" repeats the whole list forever.
FiniteTS parse_finite_target(const std::string& s) {
    size_t sep = s.find(';');
    if (sep == std::string::npos)
        fail_parse("MalformedRepresentation", "expected 'TSEQ;CF' in '" + s + "'");
    FiniteTS t;
    t.tseq = parse_tseq(s.substr(0, sep)).digits;
    std::string cf = s.substr(sep + 1);
    bool periodic = !cf.empty() && cf.back() == '*';
    if (periodic) {
        // A repeating block is not subject to the finite-cf rule that the
        // last digit exceeds 1, so parse the digit list directly.
        cf.pop_back();
        if (cf.size() < 2 || cf.front() != '[' || cf.back() != ']')
            fail_parse("BadCF", "expected '[a1,...,an]*' in '" + s + "'");
        std::stringstream ss(cf.substr(1, cf.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) t.cf.period.push_back(parse_int(item));
        if (t.cf.period.empty()) fail_parse("BadCF", "empty period in '" + s + "'");
        for (const Int& d : t.cf.period)
            if (d < 1) fail_parse("BadCF", "digits must be >= 1 in '" + s + "'");
        return t;
    }
    CF parsed = parse_cf(cf);
    if (parsed.kind != CF::Kind::digits)
        fail_parse("MalformedRepresentation", "cf tail must be a digit list");
    t.cf.head = parsed.digits;
    return t;
}

// Scalars may contain ';' themselves ("poly:...;iv:..."), so try every
// split point until both halves parse.
RealPair parse_real_pair(const std::string& s) {
    for (size_t sep = s.find(';'); sep != std::string::npos; sep = s.find(';', sep + 1)) {
        try {
            RealPair p;
            p.x = parse_scalar(s.substr(0, sep));
            std::string y = s.substr(sep + 1);
            if (y == "x^2") {
                p.y = p.x;
                p.y_is_x_squared = true;
            } else {
                p.y = parse_scalar(y);
            }
            return p;
        } catch (const Error&) {
            continue;
        }
    }
    fail_parse("MalformedScalar", "expected 'x;y' in '" + s + "'");
}

void emit_speed(const std::vector<ErrorRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "k,s,m,n,err_alpha_lo,err_alpha_hi,err_beta_lo,err_beta_hi,"
                     "product_lo,product_hi\n";
        for (const ErrorRow& r : rows) {
            std::cout << r.k << "," << r.s.get_str() << "," << r.m.get_str() << ","
                      << r.n.get_str() << "," << decimal_string(iv_lo(r.err_alpha), 40) << ","
                      << decimal_string(iv_hi(r.err_alpha), 40) << ","
                      << decimal_string(iv_lo(r.err_beta), 40) << ","
                      << decimal_string(iv_hi(r.err_beta), 40) << ","
                      << decimal_string(iv_lo(r.product), 40) << ","
                      << decimal_string(iv_hi(r.product), 40) << "\n";
        }
        return;
    }
    if (format == "json") {
        json out = {{"schema", kSchema}, {"rows", json::array()}};
        for (const ErrorRow& r : rows)
            out["rows"].push_back({{"k", r.k},
                                   {"s", r.s.get_str()},
                                   {"m", r.m.get_str()},
                                   {"n", r.n.get_str()},
                                   {"err_alpha", iv_json(r.err_alpha)},
                                   {"err_beta", iv_json(r.err_beta)},
                                   {"product", iv_json(r.product)}});
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const ErrorRow& r : rows)
        std::cout << "k=" << r.k << " s=" << r.s.get_str() << " m=" << r.m.get_str()
                  << " n=" << r.n.get_str() << " product=" << iv_text(r.product) << "\n";
}

void cmd_tree_level(long n, const std::string& construction, const std::string& format) {
    std::vector<TreeNode> nodes;
    if (construction == "geometric") {
        for (const Triple& t : level_geometric(n)) nodes.push_back({t, classify(t), n});
    } else {
        nodes = level_counterimage(n);
    }
    if (format == "json") {
        json out = {{"schema", kSchema}, {"level", n}, {"nodes", json::array()}};
        for (const TreeNode& node : nodes)
            out["nodes"].push_back({{"point", format_triple(node.triple)},
                                    {"kind", kind_name(node.kind)}});
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "point,kind\n";
        for (const TreeNode& node : nodes)
            std::cout << format_triple(node.triple) << "," << kind_name(node.kind) << "\n";
    } else {
        for (const TreeNode& node : nodes)
            std::cout << format_triple(node.triple) << "  " << kind_name(node.kind) << "\n";
    }
}

void cmd_tree_check(long n) {
    auto counter = levels_counterimage(n);
    auto geo = levels_geometric(n);
    bool ok = true;
    for (long lvl = 0; lvl <= n; ++lvl) {
        const auto& cn = counter[static_cast<size_t>(lvl + 1)];
        const auto& gn = geo[static_cast<size_t>(lvl)];
        bool match = cn.size() == gn.size();
        if (match) {
            std::vector<Triple> cs;
            for (const TreeNode& node : cn) cs.push_back(node.triple);
            std::sort(cs.begin(), cs.end(), triple_less);
            match = std::equal(cs.begin(), cs.end(), gn.begin());
        }
        std::cout << "level " << lvl << ": " << cn.size() << " points, "
                  << (match ? "match" : "MISMATCH") << "\n";
        ok = ok && match;
    }
    if (!ok) fail_domain("ConstructionMismatch", "constructions disagree");
}

void cmd_tree_complete(long qmax, long nmax) {
    CompletenessReport rep = completeness_check(qmax, nmax);
    std::cout << "checked " << rep.checked << " triples: "
              << (rep.ok ? "complete" : "INCOMPLETE") << "\n";
    for (const Triple& t : rep.missing) std::cout << "missing " << format_triple(t) << "\n";
    for (const Triple& t : rep.duplicated) std::cout << "duplicated " << format_triple(t) << "\n";
    for (const Triple& t : rep.misplaced) std::cout << "misplaced " << format_triple(t) << "\n";
    if (!rep.ok) fail_domain("IncompleteTree", "tree misses or misplaces triples");
}

void cmd_encode(const std::string& pair, const std::string& format) {
    Triple t = parse_triple(pair);
    Representation rep = representation_of(t);
    AnchoredWord aw = word_of(rep);
    Mat3 m = matrix_of(t);
    Int rk = rank(t);
    std::string decomp = backimage_decomposition(t);
    if (format == "json") {
        json out = {{"schema", kSchema},
                    {"point", format_triple(t)},
                    {"representation", format_representation(rep)},
                    {"kind", kind_name(rep.kind)},
                    {"anchor", format_triple(aw.anchor)},
                    {"word", aw.word},
                    {"matrix", mat_json(m)},
                    {"rank", rk.get_str()},
                    {"decomposition", decomp}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "point          " << format_triple(t) << "\n"
                  << "representation " << format_representation(rep) << "\n"
                  << "kind           " << kind_name(rep.kind) << "\n"
                  << "anchor         " << format_triple(aw.anchor) << "\n"
                  << "word           " << aw.word << "\n"
                  << "matrix         " << mat_text(m) << "\n"
                  << "rank           " << rk.get_str() << "\n"
                  << "decomposition  " << decomp << "\n";
    }
}

void cmd_decode(const std::string& word, const std::string& repr, const std::string& format) {
    Triple t{Int(2), Int(1), Int(1)};
    Representation rep;
    if (!word.empty() || repr.empty()) {
        rep = representation_of_word(word);
        t = point_of(rep);
    } else {
        rep = parse_representation(repr);
        t = point_of(rep);
    }
    if (format == "json") {
        json out = {{"schema", kSchema},
                    {"point", format_triple(t)},
                    {"representation", format_representation(rep)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << format_triple(t) << "\n";
    }
}

void cmd_tseq(const std::string& pair, const std::string& real, long prec, long max_digits,
              const std::string& format) {
    if (!pair.empty()) {
        Triple t = parse_triple(pair);
        RationalExpansion ex = triangle_sequence_rational(t);
        if (format == "json") {
            json out = {{"schema", kSchema},
                        {"digits", format_tseq(ex.seq)},
                        {"xi", format_frac(ex.xi)},
                        {"kind", kind_name(ex.kind)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "digits " << format_tseq(ex.seq) << "\nxi     " << format_frac(ex.xi)
                      << "\nkind   " << kind_name(ex.kind) << "\n";
        }
        return;
    }
    RealPair p = parse_real_pair(real);
    (void)prec;
    RealExpansion ex = triangle_sequence_real(p, max_digits);
    if (format == "json") {
        json out = {{"schema", kSchema},
                    {"digits", format_tseq(ex.seq)},
                    {"remainder_x", iv_json(ex.remainder.x)},
                    {"remainder_y", iv_json(ex.remainder.y)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "digits      " << format_tseq(ex.seq) << "\n"
                  << "remainder x " << iv_text(ex.remainder.x) << "\n"
                  << "remainder y " << iv_text(ex.remainder.y) << "\n";
    }
}

void cmd_farey(const std::string& op, const std::string& value) {
    Frac x = frac_of(parse_rat(value));
    if (op == "cf") {
        std::cout << format_cf(cf_expand(x)) << "\n";
    } else if (op == "rank") {
        std::cout << farey_rank(x).get_str() << "\n";
    } else if (op == "matrix") {
        Mat2 m = farey_matrix(x);
        std::cout << "[" << m.at(0, 0).get_str() << " " << m.at(0, 1).get_str() << "] ["
                  << m.at(1, 0).get_str() << " " << m.at(1, 1).get_str() << "]\n";
    } else {
        std::cout << format_lrword(farey_code(cf_expand(x))) << "\n";
    }
}

void cmd_approx(const std::string& repr, long fixed_d, const std::string& nonconvergent,
                long steps, long prec, const std::string& format) {
    if (fixed_d > 0) {
        std::vector<Triple> rows = periodic_approximants(fixed_d, steps);
        if (format == "json") {
            json out = {{"schema", kSchema}, {"rows", json::array()}};
            for (const Triple& t : rows) out["rows"].push_back(format_triple(t));
            std::cout << out.dump(2) << "\n";
        } else {
            for (size_t k = 0; k < rows.size(); ++k)
                std::cout << "k=" << k << " " << format_triple(rows[k]) << "\n";
        }
        return;
    }
    if (!nonconvergent.empty()) {
        NonConvergent target{nullptr, parse_real_pair(nonconvergent)};
        auto rows = approximants_nonconvergent(target, steps, prec);
        if (format == "json") {
            json out = {{"schema", kSchema}, {"rows", json::array()}};
            for (const NonconvergentRow& r : rows)
                out["rows"].push_back({{"representation", format_representation(r.rep)},
                                       {"point", format_triple(r.triple)},
                                       {"err_x", iv_json(r.err_x)},
                                       {"err_y", iv_json(r.err_y)}});
            std::cout << out.dump(2) << "\n";
        } else {
            for (size_t j = 0; j < rows.size(); ++j)
                std::cout << "j=" << j << " " << format_triple(rows[j].triple) << " err_x "
                          << iv_text(rows[j].err_x) << " err_y " << iv_text(rows[j].err_y)
                          << "\n";
        }
        return;
    }
    ApproximationTarget target = parse_finite_target(repr);
    std::vector<Approximant> rows = approximants(target, steps);
    if (format == "json") {
        json out = {{"schema", kSchema}, {"rows", json::array()}};
        for (const Approximant& a : rows)
            out["rows"].push_back({{"word", a.word},
                                   {"point", format_triple(a.triple)},
                                   {"representation", format_representation(a.rep)}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (size_t j = 0; j < rows.size(); ++j)
            std::cout << "j=" << j << " word=" << rows[j].word << " "
                      << format_triple(rows[j].triple) << "\n";
    }
}

void cmd_speed(long fixed_d, const std::string& finite_ts, const std::string& eta_text,
               long steps, long prec, const std::string& format) {
    Rat eta = parse_rat(eta_text);
    std::vector<ErrorRow> rows;
    if (fixed_d > 0) {
        rows = speed_table(PeriodicD{Int(fixed_d)}, eta, steps, prec);
    } else {
        size_t sep = finite_ts.find(';');
        if (sep == std::string::npos)
            fail_parse("MalformedScalar", "expected 'omega;xi' in '" + finite_ts + "'");
        rows = finite_ts_speed(finite_ts.substr(0, sep), parse_scalar(finite_ts.substr(sep + 1)),
                               steps, eta, prec);
    }
    emit_speed(rows, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular tree, triangle sequences and L/R/I coding"};
    app.require_subcommand(1);
    std::string format = "table";

    auto* tree = app.add_subcommand("tree", "Tree levels and consistency checks");
    tree->require_subcommand(1);
    long level_n = 0;
    std::string construction = "counterimage";
    auto* tree_level = tree->add_subcommand("level", "List one level");
    tree_level->add_option("n", level_n, "Level index")->required();
    tree_level->add_option("--construction", construction)
        ->check(CLI::IsMember({"counterimage", "geometric", "both"}));
    tree_level->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
    long check_n = 0;
    auto* tree_check = tree->add_subcommand("check", "Compare both constructions");
    tree_check->add_option("n", check_n, "Deepest level")->required();
    long qmax = 8, nmax = 40;
    auto* tree_complete = tree->add_subcommand("complete", "Completeness audit");
    tree_complete->add_option("--qmax", qmax)->required();
    tree_complete->add_option("--nmax", nmax)->required();

    std::string enc_x, enc_y;
    auto* encode = app.add_subcommand("encode", "Representation, word and matrix of a pair");
    encode->add_option("x", enc_x, "First coordinate p/q")->required();
    encode->add_option("y", enc_y, "Second coordinate r/q")->required();
    encode->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    std::string dec_word, dec_repr;
    auto* decode = app.add_subcommand("decode", "Point of a word or representation");
    decode->add_option("--word", dec_word);
    decode->add_option("--repr", dec_repr);
    decode->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    std::string ts_pair, ts_real;
    long ts_prec = kDefaultPrecision, ts_max = 40;
    auto* tseq = app.add_subcommand("tseq", "Triangle sequence of a pair");
    tseq->add_option("--pair", ts_pair);
    tseq->add_option("--real", ts_real);
    tseq->add_option("--prec", ts_prec);
    tseq->add_option("--max", ts_max);
    tseq->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    std::string farey_op, farey_value;
    auto* farey = app.add_subcommand("farey", "One-dimensional Stern-Brocot tools");
    farey->add_option("op", farey_op)->required()->check(
        CLI::IsMember({"cf", "rank", "matrix", "code"}));
    farey->add_option("x", farey_value)->required();

    std::string ap_repr, ap_nonconv;
    long ap_fixed = 0, ap_steps = 10, ap_prec = kDefaultPrecision;
    auto* approx = app.add_subcommand("approx", "Approximant sequences");
    approx->add_option("--repr", ap_repr);
    approx->add_option("--fixed-point", ap_fixed);
    approx->add_option("--nonconvergent", ap_nonconv);
    approx->add_option("--steps", ap_steps);
    approx->add_option("--prec", ap_prec);
    approx->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    std::string sp_finite, sp_eta = "1";
    long sp_fixed = 0, sp_steps = 20, sp_prec = kDefaultPrecision;
    auto* speed = app.add_subcommand("speed", "Certified approximation-speed rows");
    speed->add_option("--fixed-point", sp_fixed);
    speed->add_option("--finite-ts", sp_finite);
    speed->add_option("--eta", sp_eta)->required();
    speed->add_option("--steps", sp_steps);
    speed->add_option("--prec", sp_prec);
    speed->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tree_level->parsed()) {
            cmd_tree_level(level_n, construction, format);
        } else if (tree_check->parsed()) {
            cmd_tree_check(check_n);
        } else if (tree_complete->parsed()) {
            cmd_tree_complete(qmax, nmax);
        } else if (encode->parsed()) {
            cmd_encode(enc_x + "," + enc_y, format);
        } else if (decode->parsed()) {
            if (dec_word.empty() && dec_repr.empty())
                fail_parse("MissingInput", "decode needs --word or --repr");
            cmd_decode(dec_word, dec_repr, format);
        } else if (tseq->parsed()) {
            if (ts_pair.empty() && ts_real.empty())
                fail_parse("MissingInput", "tseq needs --pair or --real");
            cmd_tseq(ts_pair, ts_real, ts_prec, ts_max, format);
        } else if (farey->parsed()) {
            cmd_farey(farey_op, farey_value);
        } else if (approx->parsed()) {
            if (ap_repr.empty() && ap_fixed == 0 && ap_nonconv.empty())
                fail_parse("MissingInput", "approx needs --repr, --fixed-point or --nonconvergent");
            cmd_approx(ap_repr, ap_fixed, ap_nonconv, ap_steps, ap_prec, format);
        } else if (speed->parsed()) {
            if (sp_fixed == 0 && sp_finite.empty())
                fail_parse("MissingInput", "speed needs --fixed-point or --finite-ts");
            cmd_speed(sp_fixed, sp_finite, sp_eta, sp_steps, sp_prec, format);
        }
    } catch (const Error& e) {
        std::cerr << "error [" << e.name() << "]: " << e.what() << "\n";
        switch (e.cls()) {
            case ErrClass::parse: return 2;
            case ErrClass::domain: return 3;
            case ErrClass::precision: return 4;
        }
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

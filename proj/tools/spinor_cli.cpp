// Command line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or precondition error.
#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinor/branching.hpp"
#include "spinor/io.hpp"
#include "spinor/oracle.hpp"
#include "spinor/series.hpp"
#include "spinor/verify.hpp"

using namespace spinor;

namespace {

struct Options {
    std::string type = "c";
    std::string group;
    int n = 0;
    int m = 0;
    int k = 0;
    std::string lambda, mu, nu;
    std::vector<std::string> lambdas;
    int degree = 8;
    std::string format = "tsv";
    std::string suite = "all";
    long long limit = -1;
    std::string content;
    int box_limit = -1;
    bool list = false;
    bool odd = false;
    bool unitarizable = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

GroupSpec group_of(const Options& o, GType g) {
    if (o.n <= 0) throw UsageError("--n is required");
    if (o.group.empty()) return paired_group(g, o.n);
    GroupSpec G(parse_family(o.group), o.n);
    if (!type_matches(g, G)) throw UsageError("type " + to_string(g) + " does not pair with " + G.str());
    return G;
}

bool json_out(const Options& o) {
    if (o.format != "json" && o.format != "tsv") throw UsageError("--format must be json or tsv");
    return o.format == "json";
}

int cmd_lrcoef(const Options& o) {
    Partition l = parse_partition(o.lambda), mu = parse_partition(o.mu), nu = parse_partition(o.nu);
    long long c = lr_coef(l, mu, nu);
    if (json_out(o)) {
        std::cout << json{{"lambda", to_json(l)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"count", c}}.dump()
                  << "\n";
    } else {
        std::cout << c << "\n";
    }
    return 0;
}

int cmd_tensor(const Options& o) {
    GType g = parse_gtype(o.type);
    if (o.m <= 0 || o.n <= 0) throw UsageError("--m and --n are required");
    TensorQuery q{g, o.m, o.n, parse_partition(o.lambda), parse_partition(o.mu), parse_partition(o.nu)};
    auto set = lr_set_tensor(q);
    bool stable = tensor_stable(q);
    if (json_out(o)) {
        json j = count_json(g, q.lambda, q.mu, q.nu, static_cast<long long>(set.size()), stable);
        if (o.list) {
            json elems = json::array();
            for (std::size_t i = 0; i < set.size() && (o.limit < 0 || static_cast<long long>(i) < o.limit); ++i)
                elems.push_back(to_json(set[i]));
            j["elements"] = elems;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "lambda\tmu\tnu\ttype\tcount\tstable\n"
                  << partition_cell(q.lambda) << "\t" << partition_cell(q.mu) << "\t" << partition_cell(q.nu)
                  << "\t" << to_string(g) << "\t" << set.size() << "\t" << (stable ? "true" : "false") << "\n";
        if (o.list)
            for (std::size_t i = 0; i < set.size() && (o.limit < 0 || static_cast<long long>(i) < o.limit); ++i)
                std::cout << spinor_tsv(set[i]) << "\n";
    }
    return 0;
}

int cmd_branch(const Options& o) {
    GType g = parse_gtype(o.type);
    GroupSpec G = group_of(o, g);
    Partition lam = parse_partition(o.lambda);
    std::vector<std::pair<Partition, long long>> rows;
    std::vector<SpinorTableau> witnesses;
    if (!o.mu.empty()) {
        Partition mu = parse_partition(o.mu);
        witnesses = lr_set_branch({g, G, mu, lam});
        rows.emplace_back(mu, static_cast<long long>(witnesses.size()));
    } else {
        rows = branch_table(g, G, lam);
    }
    bool stable = 2 * lam.length() <= G.n;
    if (json_out(o)) {
        json r = json::array();
        for (auto& [mu, c] : rows) r.push_back({{"mu", to_json(mu)}, {"multiplicity", c}});
        json j = {{"type", to_string(g)},
                  {"group", {{"family", to_string(G.family)}, {"n", G.n}}},
                  {"lambda", to_json(lam)},
                  {"stable", stable},
                  {"rows", r}};
        if (o.list) {
            json w = json::array();
            for (auto& t : witnesses) w.push_back(to_json(t));
            j["elements"] = w;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "# " << G.str() << " lambda=" << partition_cell(lam) << "\n";
        std::cout << "mu\tmultiplicity\n";
        for (auto& [mu, c] : rows) std::cout << partition_cell(mu) << "\t" << c << "\n";
        if (o.list)
            for (auto& t : witnesses) std::cout << spinor_tsv(t) << "\n";
    }
    return 0;
}

int cmd_restrict_tensor(const Options& o) {
    GType g = parse_gtype(o.type);
    GroupSpec G = group_of(o, g);
    std::vector<Partition> parts;
    for (auto& s : o.lambdas) parts.push_back(parse_partition(s));
    if (parts.empty()) throw UsageError("at least one --lambda is required");
    Partition mu = parse_partition(o.mu);
    long long c = gl_tensor_restriction(g, G, parts, mu);
    if (json_out(o)) {
        json ls = json::array();
        for (auto& p : parts) ls.push_back(to_json(p));
        std::cout << json{{"type", to_string(g)},
                          {"group", {{"family", to_string(G.family)}, {"n", G.n}}},
                          {"lambdas", ls},
                          {"mu", to_json(mu)},
                          {"multiplicity", c}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "mu\tmultiplicity\n" << partition_cell(mu) << "\t" << c << "\n";
    }
    return 0;
}

int cmd_enumerate(const Options& o) {
    GType g = parse_gtype(o.type);
    GroupSpec G = group_of(o, g);
    Partition lam = parse_partition(o.lambda);
    if (o.k <= 0) throw UsageError("--k is required");
    if (lam.part(1) > o.k) throw UsageError("entry bound k must be at least lambda_1");
    EnumerateOptions opt;
    opt.alphabet = o.odd ? GradedAlphabet::odd(o.k) : GradedAlphabet::even(o.k);
    opt.box_limit = o.box_limit;
    opt.limit = o.limit;
    if (!o.content.empty()) {
        std::vector<int> c{0};
        std::stringstream ss(o.content);
        std::string tok;
        while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
        opt.content = c;
    }
    bool js = json_out(o);
    json arr = json::array();
    long long count = enumerate_spinor(g, G, lam, opt, [&](const SpinorTableau& t) {
        if (js)
            arr.push_back(to_json(t));
        else
            std::cout << spinor_tsv(t) << "\n";
        return true;
    });
    if (js) std::cout << json{{"count", count}, {"elements", arr}}.dump() << "\n";
    return 0;
}

int cmd_char(const Options& o) {
    GType g = parse_gtype(o.type);
    if (o.k <= 0) throw UsageError("--k is required");
    if (o.n <= 0) throw UsageError("--n is required");
    Partition lam = parse_partition(o.lambda);
    CharacterSeries s = o.unitarizable
                            ? char_unitarizable(g, o.k, lam, o.n, o.degree)
                            : char_spinor(g, group_of(o, g), lam,
                                          o.odd ? GradedAlphabet::odd(o.k) : GradedAlphabet::even(o.k), o.degree);
    if (json_out(o)) {
        std::cout << to_json(s).dump() << "\n";
    } else {
        std::cout << "# degree=" << s.degree() << "\n";
        std::cout << "z";
        for (int i = 1; i <= s.k(); ++i) std::cout << "\tx" << i;
        std::cout << "\tcoef\n";
        for (auto& [key, c] : s.terms()) {
            std::cout << key.first;
            for (int e : key.second) std::cout << "\t" << e;
            std::cout << "\t" << c << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& o) {
    auto results = run_suite(o.suite);
    bool ok = true;
    bool js = json_out(o);
    json arr = json::array();
    for (auto& r : results) {
        ok = ok && r.passed;
        if (js)
            arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
        else
            std::cout << (r.passed ? "PASS" : "FAIL") << "\t" << r.name << "\t" << r.detail << "\n";
    }
    if (js) std::cout << json{{"passed", ok}, {"suites", arr}}.dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinor: spinor-model crystals, branching and LR multiplicities"};
    app.require_subcommand(1);
    Options o;

    auto fmt = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    };
    auto typed = [&](CLI::App* c) {
        c->add_option("--type", o.type, "b, c, d or bb")->required();
    };

    auto* lr = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient c^lambda_{mu nu}");
    lr->add_option("--lambda", o.lambda)->required();
    lr->add_option("--mu", o.mu);
    lr->add_option("--nu", o.nu);
    fmt(lr);

    auto* ten = app.add_subcommand("tensor", "tensor multiplicity c^lambda_{mu nu}(g)");
    typed(ten);
    ten->add_option("--m", o.m)->required();
    ten->add_option("--n", o.n)->required();
    ten->add_option("--lambda", o.lambda);
    ten->add_option("--mu", o.mu);
    ten->add_option("--nu", o.nu);
    ten->add_flag("--list", o.list, "also print the elements");
    ten->add_option("--limit", o.limit);
    fmt(ten);

    auto* br = app.add_subcommand("branch", "branching multiplicities [V^lambda_GL : V^mu_G]");
    typed(br);
    br->add_option("--group", o.group, "Sp, O, Spin or Pin");
    br->add_option("--n", o.n)->required();
    br->add_option("--lambda", o.lambda);
    br->add_option("--mu", o.mu, "a single mu; prints its LR set with --list");
    br->add_flag("--list", o.list);
    fmt(br);

    auto* rt = app.add_subcommand("restrict-tensor", "restriction of a GL_n tensor product");
    typed(rt);
    rt->add_option("--group", o.group);
    rt->add_option("--n", o.n)->required();
    rt->add_option("--lambda", o.lambdas, "repeat once per tensor factor")->required();
    rt->add_option("--mu", o.mu);
    fmt(rt);

    auto* en = app.add_subcommand("enumerate", "list T^g_k(lambda, n)");
    typed(en);
    en->add_option("--group", o.group);
    en->add_option("--n", o.n)->required();
    en->add_option("--k", o.k)->required();
    en->add_option("--lambda", o.lambda);
    en->add_option("--content", o.content, "exact content m_1,m_2,...");
    en->add_option("--limit", o.limit);
    en->add_option("--box-limit", o.box_limit, "needed with --odd");
    en->add_flag("--odd", o.odd, "use the alphabet 1' < 2' < ... < k'");
    fmt(en);

    auto* ch = app.add_subcommand("char", "truncated character series");
    typed(ch);
    ch->add_option("--group", o.group);
    ch->add_option("--n", o.n)->required();
    ch->add_option("--k", o.k)->required();
    ch->add_option("--lambda", o.lambda);
    ch->add_option("--degree", o.degree);
    ch->add_flag("--odd", o.odd);
    ch->add_flag("--unitarizable", o.unitarizable, "character of the unitarizable module for g in {bb,c,d}");
    fmt(ch);

    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
    fmt(ve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*lr) return cmd_lrcoef(o);
        if (*ten) return cmd_tensor(o);
        if (*br) return cmd_branch(o);
        if (*rt) return cmd_restrict_tensor(o);
        if (*en) return cmd_enumerate(o);
        if (*ch) return cmd_char(o);
        if (*ve) return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

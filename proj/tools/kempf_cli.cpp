// Command-line interface. Every subcommand reads exact JSON (or the inline
// mini-languages for types, characters and states), computes with rational
// arithmetic, and prints one JSON document on stdout.
//
// Exit codes: 0 success, 1 domain error (error JSON on stdout), 2 usage
// error, 3 success with an "unbounded" separability result.

#include "kempf/kempf.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using kempf::Json;

int g_exit_code = 0;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

long long parse_characteristic(const std::string& text) {
    if (text == "zero" || text == "0") return 0;
    std::size_t pos = 0;
    long long p = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad characteristic '" + text + "'");
    return p;
}

kempf::MinorConvention parse_convention(const std::string& text) {
    if (text == "rank") return kempf::MinorConvention::RankBased;
    if (text == "literal") return kempf::MinorConvention::Literal;
    throw std::invalid_argument("bad convention '" + text + "' (expected rank|literal)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_weight(const Json& j) {
    if (j.is_object()) return j.contains("coords");
    if (!j.is_array() || j.empty()) return false;
    for (const auto& e : j)
        if (!(e.is_array() && e.size() == 2) && !e.is_string()) return false;
    return true;
}

/// States are comma-separated weights; each weight is an array of [num,den]
/// pairs or a {"basis","coords"} object. Both the bare form
/// "[[1,1]],[[-1,1]]" and a full JSON array are accepted.
std::vector<kempf::Weight> parse_state_text(const std::string& text, const kempf::Ambient& amb) {
    std::vector<Json> candidates;
    try {
        candidates.push_back(Json::parse(text));
    } catch (const Json::exception&) {
    }
    try {
        candidates.push_back(Json::parse("[" + text + "]"));
    } catch (const Json::exception&) {
    }
    for (const auto& parsed : candidates) {
        if (!parsed.is_array() || parsed.empty()) continue;
        bool all_weights = true;
        for (const auto& e : parsed)
            if (!looks_like_weight(e)) all_weights = false;
        if (!all_weights) continue;
        std::vector<kempf::Weight> ws;
        for (const auto& e : parsed) ws.push_back(kempf::weight_from_json(e, amb));
        return ws;
    }
    throw std::invalid_argument("cannot parse state '" + text + "'");
}

kempf::Weight parse_weight_text(const std::string& text, const kempf::Ambient& amb) {
    return kempf::weight_from_json(Json::parse(text), amb);
}

kempf::HiggsStructure higgs_input(const std::string& inline_json, const std::string& file) {
    if (!inline_json.empty() && !file.empty())
        throw std::invalid_argument("give the Higgs structure inline or as a file, not both");
    if (inline_json.empty() && file.empty()) throw std::invalid_argument("missing Higgs structure input");
    std::string text = inline_json.empty() ? read_file(file) : inline_json;
    return kempf::higgs_from_json(Json::parse(text));
}

Json root_system_json(const kempf::RootSystem& rs) {
    Json cartan = Json::array();
    for (const auto& row : rs.cartan()) {
        Json r = Json::array();
        for (long v : row) r.push_back(v);
        cartan.push_back(r);
    }
    Json fund = Json::array();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        Json row = Json::array();
        for (const auto& x : rs.to_root_basis(rs.fundamental_weight(i))) row.push_back(kempf::rat_to_json(x));
        fund.push_back(row);
    }
    Json highest = Json::array();
    for (const auto& x : rs.to_root_basis(rs.highest_root())) highest.push_back(kempf::rat_to_json(x));
    return Json{{"type", rs.name()},
                {"rank", rs.rank()},
                {"cartan", cartan},
                {"gram", kempf::matrix_to_json(rs.gram_simple())},
                {"fundamental_weights_in_root_basis", fund},
                {"num_positive_roots", rs.positive_roots().size()},
                {"highest_root_in_root_basis", highest}};
}

void verify_certificate(const kempf::State& s, const kempf::InstabilityCertificate& cert) {
    const auto& amb = s.ambient;
    if (kempf::measure(s, cert.lambda) != cert.q_value)
        throw std::logic_error("certificate verification failed: m(s, lambda) != q(lambda)");
    if (kempf::measure(s, cert.lambda_normalized) != 1)
        throw std::logic_error("certificate verification failed: m(s, lambda/q) != 1");
    for (const auto& chi : s.weights)
        if (amb.pair(chi, cert.lambda) < cert.q_value)
            throw std::logic_error("certificate verification failed: obtuse-angle inequality");
    const auto& p = cert.parabolic;
    if (p.zero_roots.size() + p.positive_part.size() + p.negative_part.size() != amb.roots().size())
        throw std::logic_error("certificate verification failed: parabolic does not partition the roots");
    for (const auto& r : p.zero_roots)
        if (amb.pair(r, cert.lambda) != 0) throw std::logic_error("certificate verification failed: Levi pairing");
    for (const auto& r : p.positive_part)
        if (amb.pair(r, cert.lambda) <= 0)
            throw std::logic_error("certificate verification failed: unipotent pairing");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GIT instability toolkit"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format (json)")->check(CLI::IsMember({"json"}));

    // shared option storage; each leaf binds the flags it uses
    std::string type_str, char_expr, state_str, lambda_str, p_str = "zero";
    std::string higgs_str, higgs2_str, file_str, file2_str, convention_str = "rank";
    std::size_t guard = kempf::kDefaultSubsetGuard, rank_opt = 0;
    long long n1 = 0, n2 = 0;
    bool want_certificate = false;

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--type", type_str, "ambient type, e.g. A2 or A2xA3")->required();
        cmd->add_option("--rank", rank_opt, "rank, when --type gives only the series letter");
    };
    auto add_char = [&](CLI::App* cmd) {
        cmd->add_option("--char", char_expr, "character expression (prefix @ to read from a file)")->required();
    };
    auto ambient = [&] {
        std::string t = type_str;
        if (rank_opt > 0 && t.find_first_of("0123456789") == std::string::npos) t += std::to_string(rank_opt);
        return kempf::parse_ambient(t);
    };
    // inline payloads may name a file with a leading '@'
    auto payload = [&](const std::string& s) { return !s.empty() && s[0] == '@' ? read_file(s.substr(1)) : s; };

    // root show
    auto* root_cmd = app.add_subcommand("root", "root-system data");
    root_cmd->require_subcommand(1);
    auto* root_show = root_cmd->add_subcommand("show", "print Cartan data");
    add_type(root_show);
    root_show->callback([&] {
        kempf::Ambient amb = ambient();
        Json factors = Json::array();
        for (const auto& rs : amb.factors()) factors.push_back(root_system_json(rs));
        emit(Json{{"type", amb.name()}, {"rank", amb.rank()}, {"factors", factors}});
    });

    // char build | height | lowheight
    auto* char_cmd = app.add_subcommand("char", "characters of representations");
    char_cmd->require_subcommand(1);
    auto* char_build = char_cmd->add_subcommand("build", "evaluate a character expression");
    add_type(char_build);
    add_char(char_build);
    char_build->callback([&] {
        kempf::Ambient amb = ambient();
        emit(kempf::character_to_json(kempf::parse_character_expression(payload(char_expr), amb)));
    });
    auto* char_height = char_cmd->add_subcommand("height", "height of a character");
    add_type(char_height);
    add_char(char_height);
    char_height->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::Character c = kempf::parse_character_expression(payload(char_expr), amb);
        emit(Json{{"height", kempf::rat_to_json(kempf::height_of_char(c))}});
    });
    auto* char_low = char_cmd->add_subcommand("lowheight", "low-height test against a characteristic");
    add_type(char_low);
    add_char(char_low);
    char_low->add_option("--p", p_str, "prime characteristic, or 'zero'")->required();
    char_low->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::Character c = kempf::parse_character_expression(payload(char_expr), amb);
        long long p = parse_characteristic(p_str);
        emit(Json{{"low_height", kempf::is_low_height(c, p)},
                  {"height", kempf::rat_to_json(kempf::height_of_char(c))},
                  {"p", p_str}});
    });

    // higgs check | tensor | dual | sections
    auto* higgs_cmd = app.add_subcommand("higgs", "fiberwise Higgs-structure algebra");
    higgs_cmd->require_subcommand(1);
    auto add_higgs_input = [&](CLI::App* cmd) {
        cmd->add_option("--higgs", higgs_str, "Higgs structure as inline JSON");
        cmd->add_option("--file", file_str, "Higgs structure JSON file");
    };
    auto* higgs_check = higgs_cmd->add_subcommand("check", "integrability test");
    add_higgs_input(higgs_check);
    higgs_check->callback([&] {
        kempf::HiggsStructure h = higgs_input(higgs_str, file_str);
        emit(Json{{"integrable", kempf::check_integrability(h)}});
    });
    auto* higgs_tensor = higgs_cmd->add_subcommand("tensor", "tensor product structure");
    add_higgs_input(higgs_tensor);
    higgs_tensor->add_option("--higgs2", higgs2_str, "second Higgs structure as inline JSON");
    higgs_tensor->add_option("--file2", file2_str, "second Higgs structure JSON file");
    higgs_tensor->callback([&] {
        kempf::HiggsStructure h1 = higgs_input(higgs_str, file_str);
        kempf::HiggsStructure h2 = higgs_input(higgs2_str, file2_str);
        emit(kempf::higgs_to_json(kempf::tensor_higgs(h1, h2)));
    });
    auto* higgs_dual = higgs_cmd->add_subcommand("dual", "dual structure");
    add_higgs_input(higgs_dual);
    higgs_dual->callback([&] { emit(kempf::higgs_to_json(kempf::dual_higgs(higgs_input(higgs_str, file_str)))); });
    auto* higgs_sections_cmd = higgs_cmd->add_subcommand("sections", "basis of the common kernel");
    add_higgs_input(higgs_sections_cmd);
    higgs_sections_cmd->callback([&] {
        auto basis = kempf::higgs_sections(higgs_input(higgs_str, file_str));
        Json vecs = Json::array();
        for (const auto& v : basis) vecs.push_back(kempf::vec_to_json(v));
        emit(Json{{"dim", basis.size()}, {"basis", vecs}});
    });

    // instab optimal | semistable | strata | filtration | measure
    auto* instab_cmd = app.add_subcommand("instab", "instability computations");
    instab_cmd->require_subcommand(1);
    auto* instab_opt = instab_cmd->add_subcommand("optimal", "optimal destabilizing 1-PS");
    add_type(instab_opt);
    instab_opt->add_option("--state", state_str, "weight set of the state")->required();
    instab_opt->add_flag("--certificate", want_certificate, "emit the re-verified full certificate");
    instab_opt->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::State s(amb, parse_state_text(payload(state_str), amb));
        auto cert = kempf::optimal_destabilizer(s);
        if (!cert) {
            emit(Json{{"semistable", true}});
            return;
        }
        if (want_certificate) {
            verify_certificate(s, *cert);
            Json j = kempf::certificate_to_json(amb, *cert);
            j["semistable"] = false;
            emit(j);
        } else {
            emit(Json{{"semistable", false},
                      {"lambda", kempf::weight_to_json(cert->lambda)},
                      {"lambda_normalized", kempf::weight_to_json(cert->lambda_normalized)},
                      {"measure", kempf::rat_to_json(cert->measure_value)},
                      {"q", kempf::rat_to_json(cert->q_value)}});
        }
    });
    auto* instab_ss = instab_cmd->add_subcommand("semistable", "semistability test");
    add_type(instab_ss);
    instab_ss->add_option("--state", state_str, "weight set of the state")->required();
    instab_ss->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::State s(amb, parse_state_text(payload(state_str), amb));
        emit(Json{{"semistable", kempf::is_semistable(s)}});
    });
    auto* instab_strata = instab_cmd->add_subcommand("strata", "stratification index set");
    add_type(instab_strata);
    add_char(instab_strata);
    instab_strata->add_option("--state", state_str, "optional state to locate");
    instab_strata->add_option("--guard", guard, "subset enumeration guard");
    instab_strata->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::Character c = kempf::parse_character_expression(payload(char_expr), amb);
        Json j = kempf::strata_to_json(kempf::kirwan_index_set(c, guard));
        if (!state_str.empty()) {
            kempf::State s(amb, parse_state_text(payload(state_str), amb));
            kempf::Weight beta = kempf::stratum_of(s, c);
            j["stratum"] = Json{{"beta", kempf::weight_to_json(beta)}, {"q", kempf::rat_to_json(amb.q(beta))}};
        }
        emit(j);
    });
    auto* instab_filt = instab_cmd->add_subcommand("filtration", "weight filtration against a 1-PS");
    add_type(instab_filt);
    add_char(instab_filt);
    instab_filt->add_option("--lambda", lambda_str, "1-PS as a weight")->required();
    instab_filt->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::Character c = kempf::parse_character_expression(payload(char_expr), amb);
        kempf::Weight lam = parse_weight_text(payload(lambda_str), amb);
        emit(kempf::filtration_to_json(kempf::weight_filtration(c, lam)));
    });
    auto* instab_measure = instab_cmd->add_subcommand("measure", "instability measure m(state, lambda)");
    add_type(instab_measure);
    instab_measure->add_option("--state", state_str, "weight set of the state")->required();
    instab_measure->add_option("--lambda", lambda_str, "1-PS as a weight")->required();
    instab_measure->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::State s(amb, parse_state_text(payload(state_str), amb));
        kempf::Weight lam = parse_weight_text(payload(lambda_str), amb);
        emit(Json{{"measure", kempf::rat_to_json(kempf::measure(s, lam))}});
    });

    // sep index | psibar
    auto* sep_cmd = app.add_subcommand("sep", "separability indices");
    sep_cmd->require_subcommand(1);
    auto* sep_index = sep_cmd->add_subcommand("index", "separability index with the g_S audit table");
    add_type(sep_index);
    add_char(sep_index);
    sep_index->add_option("--convention", convention_str, "maximal-minor convention (rank|literal)");
    sep_index->add_option("--guard", guard, "subset enumeration guard");
    sep_index->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::Character c = kempf::parse_character_expression(payload(char_expr), amb);
        kempf::SeparabilityReport rep = kempf::separability_index(c, parse_convention(convention_str), guard);
        emit(kempf::separability_report_to_json(rep));
        if (rep.psi_unbounded) g_exit_code = 3;
    });
    auto* sep_psibar = sep_cmd->add_subcommand("psibar", "max separability index over exterior powers");
    add_type(sep_psibar);
    add_char(sep_psibar);
    sep_psibar->add_option("--convention", convention_str, "maximal-minor convention (rank|literal)");
    sep_psibar->add_option("--guard", guard, "subset enumeration guard");
    sep_psibar->callback([&] {
        kempf::Ambient amb = ambient();
        kempf::Character c = kempf::parse_character_expression(payload(char_expr), amb);
        kempf::PrimeBound b = kempf::psi_bar(c, parse_convention(convention_str), guard);
        emit(Json{{"psi_bar", b.unbounded ? Json("unbounded") : kempf::int_to_json(b.value)}});
        if (b.unbounded) g_exit_code = 3;
    });

    // bound tensor
    auto* bound_cmd = app.add_subcommand("bound", "characteristic bounds");
    bound_cmd->require_subcommand(1);
    auto* bound_tensor = bound_cmd->add_subcommand("tensor", "tensor-product rank bound");
    bound_tensor->add_option("--n1", n1, "rank of the first factor")->required();
    bound_tensor->add_option("--n2", n2, "rank of the second factor")->required();
    bound_tensor->add_option("--p", p_str, "prime characteristic, or 'zero'")->required();
    bound_tensor->callback([&] {
        emit(Json{{"ok", kempf::tensor_bound_check(n1, n2, parse_characteristic(p_str))}});
    });

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
    selftest->callback([&] {
        kempf::SelfTestResult res = kempf::run_selftest();
        Json failures = Json::array();
        for (const auto& f : res.failures) failures.push_back(f);
        emit(Json{{"passed", res.passed}, {"failed", res.failed}, {"failures", failures}});
        if (res.failed > 0) g_exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        emit(Json{{"error", e.what()}});
        return 1;
    }
    return g_exit_code;
}

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ti/errors.hpp"
#include "ti/invariants.hpp"
#include "ti/modules.hpp"
#include "ti/moments.hpp"
#include "ti/serialize.hpp"
#include "ti/templates.hpp"
#include "ti/verify.hpp"

namespace {

// Exit contract, fixed for scripting: 0 ok, 1 verification failure,
// 2 usage, 3 parse, 4 domain.
constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitDomain = 4;

struct UsageFailure {
    std::string message;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

// --seed wins over TI_SEED; unset means 0.
std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t flag_value) {
    if (flag->count() > 0) return flag_value;
    const char* env = std::getenv("TI_SEED");
    if (env == nullptr) return 0;
    const std::string text(env);
    if (!text.empty() && text[0] != '-') {
        try {
            std::size_t used = 0;
            const unsigned long long value = std::stoull(text, &used);
            if (used == text.size()) return value;
        } catch (const std::exception&) {
        }
    }
    throw UsageFailure{"TI_SEED must be an unsigned integer, got \"" + text + "\""};
}

ti::MomentTensor raw_from_file(const std::string& input, int max_order) {
    if (input.ends_with(".csv"))
        return ti::raw_moments(ti::load_point_cloud_csv_file(input), max_order);
    if (input.ends_with(".json"))
        return ti::raw_moments(ti::voxel_grid_from_json_file(input), max_order);
    throw UsageFailure{"input must be a .csv point cloud or a .json voxel grid: " + input};
}

std::vector<ti::NamedInvariant> invariant_sets_for(int order, const std::string& set) {
    const ti::InvariantSet which =
        set == "rational" ? ti::InvariantSet::rational : ti::InvariantSet::polynomial;
    return ti::generate_invariants(order, which);
}

int run_gen(int order, const std::string& set, const std::string& format) {
    if (order != 2 && order != 3)
        return usage_error("symbolic generation supported for orders 2 and 3");
    const auto invs = invariant_sets_for(order, set);
    if (format == "json")
        std::cout << ti::invariants_to_json(invs) << "\n";
    else
        std::cout << ti::invariants_to_text(invs);
    return kExitOk;
}

int run_moments(const std::string& input, int max_order, const std::string& kind) {
    ti::MomentTensor tensor = raw_from_file(input, max_order);
    if (kind != "raw") tensor = ti::central_moments(tensor);
    if (kind == "normalized") tensor = ti::normalized_moments(tensor);
    std::cout << ti::moment_tensor_to_json(tensor) << "\n";
    return kExitOk;
}

int run_eval(const std::string& input, int order, const std::string& set) {
    if (order != 2 && order != 3)
        return usage_error("symbolic generation supported for orders 2 and 3");
    const auto invs = invariant_sets_for(order, set);
    const ti::MomentTensor normalized =
        ti::normalized_moments(ti::central_moments(raw_from_file(input, order)));
    nlohmann::ordered_json values;
    for (const ti::NamedInvariant& inv : invs)
        values[inv.name] = ti::evaluate_invariant(inv, normalized);
    std::cout << values.dump(2) << "\n";
    return kExitOk;
}

int run_verify(const std::string& input, int rotations, std::uint64_t seed, double tol) {
    if (!input.ends_with(".csv"))
        return usage_error("verify requires a .csv point cloud: " + input);
    const ti::PointCloud cloud = ti::load_point_cloud_csv_file(input);
    std::vector<ti::NamedInvariant> invs = ti::generate_invariants(2, ti::InvariantSet::polynomial);
    for (const ti::InvariantSet set :
         {ti::InvariantSet::polynomial, ti::InvariantSet::rational}) {
        auto more = ti::generate_invariants(3, set);
        invs.insert(invs.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
    }
    const ti::InvarianceReport report =
        ti::invariance_report(cloud, invs, rotations, tol, seed);
    std::cout << ti::invariance_report_to_json(report) << "\n";
    return report.all_pass ? kExitOk : kExitVerification;
}

int run_count(int order, bool have_poincare, int poincare_degree) {
    if (order < 2) return usage_error("order must be at least 2");
    if (!have_poincare) {
        std::cout << ti::generator_count(order).get_str() << "\n";
        return kExitOk;
    }
    if (order != 3)
        return usage_error("series coefficients are available for order 3 only");
    const auto coefficients = ti::poincare_coefficients(poincare_degree);
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        std::cout << (i ? " " : "") << coefficients[i].get_str();
    std::cout << "\n";
    return kExitOk;
}

int run_independence(const std::string& point, std::uint64_t seed) {
    std::map<ti::Variable, ti::Rational> at = ti::independence_test_point();
    if (point == "random") {
        ti::SplitMix64 rng(ti::stream_seed(seed, 0));
        for (auto& [v, value] : at)
            value = ti::Rational(static_cast<unsigned long>(rng.next() % 999983 + 1));
    }
    std::vector<ti::Polynomial> bodies;
    const ti::TemplateLibrary& lib = ti::TemplateLibrary::builtin();
    for (const std::string& name : ti::TemplateLibrary::rational_names())
        bodies.push_back(lib.get(name).body);
    std::vector<ti::Variable> vars;
    vars.reserve(at.size());
    for (const auto& [v, value] : at) vars.push_back(v);

    std::cout << "point:";
    for (const auto& [v, value] : at)
        std::cout << " " << v.name() << "=" << ti::to_string(value);
    std::cout << "\n";
    std::cout << "generators: " << bodies.size() << "\n";
    std::cout << "rank: " << ti::jacobian_rank(bodies, vars, at) << "\n";
    return kExitOk;
}

int run_decompose(std::vector<int> orders) {
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    if (orders.empty()) return usage_error("at least one order is required");
    if (orders.front() < 2) return usage_error("moment orders start at 2");
    const ti::ModuleDecomposition d = ti::decompose(orders);
    for (std::size_t i = 0; i < d.components.size(); ++i)
        std::cout << (i ? ", " : "") << "V" << d.components[i].s << " x"
                  << d.components[i].multiplicity;
    std::cout << "\n";
    for (const ti::IsotypicComponent& c : d.components)
        for (const ti::Polynomial& z : c.lowest_weight)
            std::cout << "  V" << c.s << " lowest weight: " << z.str() << "\n";
    return kExitOk;
}

int run_self_check() {
    const ti::SelfCheckReport report = ti::run_self_check();
    std::cout << ti::self_check_to_text(report);
    return report.all_pass ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotation/translation/scale invariants of 3D moments"};
    app.require_subcommand(1);

    CLI::App* gen = app.add_subcommand("gen", "generate an invariant set symbolically");
    int gen_order = 2;
    std::string gen_set = "polynomial";
    std::string gen_format = "text";
    gen->add_option("--order", gen_order, "moment order (2 or 3)")->required();
    gen->add_option("--set", gen_set, "generating set: polynomial or rational")
        ->check(CLI::IsMember({"polynomial", "rational"}));
    gen->add_option("--format", gen_format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* moments = app.add_subcommand("moments", "compute a moment tensor from data");
    std::string moments_input;
    int moments_order = 3;
    std::string moments_kind = "normalized";
    moments->add_option("--input", moments_input, ".csv point cloud or .json voxel grid")
        ->required();
    moments->add_option("--max-order", moments_order, "highest total order (2..16)")
        ->check(CLI::Range(2, 16));
    moments->add_option("--kind", moments_kind, "raw, central, or normalized")
        ->check(CLI::IsMember({"raw", "central", "normalized"}));

    CLI::App* eval = app.add_subcommand("eval", "evaluate an invariant set on data");
    std::string eval_input;
    int eval_order = 2;
    std::string eval_set = "polynomial";
    eval->add_option("--input", eval_input, ".csv point cloud or .json voxel grid")
        ->required();
    eval->add_option("--order", eval_order, "moment order (2 or 3)");
    eval->add_option("--set", eval_set, "generating set: polynomial or rational")
        ->check(CLI::IsMember({"polynomial", "rational"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "check invariance under random similarity transforms");
    std::string verify_input;
    int verify_rotations = 100;
    std::uint64_t verify_seed = 0;
    double verify_tol = 1e-8;
    verify->add_option("--input", verify_input, ".csv point cloud")->required();
    verify->add_option("--rotations", verify_rotations, "number of random transforms")
        ->check(CLI::PositiveNumber);
    CLI::Option* verify_seed_opt =
        verify->add_option("--seed", verify_seed, "RNG seed (TI_SEED when absent)");
    verify->add_option("--tol", verify_tol, "relative tolerance")
        ->check(CLI::PositiveNumber);

    CLI::App* count = app.add_subcommand("count", "minimal generating set sizes");
    int count_order = 0;
    int count_poincare = 9;
    count->add_option("--order", count_order, "moment order (>= 2)")->required();
    CLI::Option* poincare_opt =
        count->add_option("--poincare", count_poincare,
                          "print invariant-space dimensions for degrees 0..N instead")
            ->check(CLI::NonNegativeNumber);

    CLI::App* independence =
        app.add_subcommand("independence", "Jacobian rank of the rational generators");
    std::string independence_point = "reference";
    std::uint64_t independence_seed = 0;
    independence
        ->add_option("--point", independence_point,
                     "evaluation point: the built-in integer reference point or a "
                     "pseudorandom one")
        ->check(CLI::IsMember({"reference", "random"}));
    CLI::Option* independence_seed_opt = independence->add_option(
        "--seed", independence_seed, "RNG seed for --point random (TI_SEED when absent)");

    CLI::App* decompose =
        app.add_subcommand("decompose", "isotypic decomposition of moment spans");
    std::vector<int> decompose_orders;
    decompose->add_option("--orders", decompose_orders, "comma-separated moment orders")
        ->required()
        ->delimiter(',');

    CLI::App* self_check =
        app.add_subcommand("self-check", "run the exact symbolic property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_order, gen_set, gen_format);
        if (moments->parsed()) return run_moments(moments_input, moments_order, moments_kind);
        if (eval->parsed()) return run_eval(eval_input, eval_order, eval_set);
        if (verify->parsed())
            return run_verify(verify_input, verify_rotations,
                              resolve_seed(verify_seed_opt, verify_seed), verify_tol);
        if (count->parsed())
            return run_count(count_order, poincare_opt->count() > 0, count_poincare);
        if (independence->parsed())
            return run_independence(independence_point,
                                    resolve_seed(independence_seed_opt, independence_seed));
        if (decompose->parsed()) return run_decompose(decompose_orders);
        if (self_check->parsed()) return run_self_check();
    } catch (const UsageFailure& e) {
        return usage_error(e.message);
    } catch (const ti::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ti::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

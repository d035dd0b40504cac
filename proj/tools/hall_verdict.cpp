// hall-verdict: decides whether all X-maximal subgroups of a finite group are
// conjugate, given the group's composition factors (or permutation
// generators) and a complete class X described by its prime set pi.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hallverdict/catalog.hpp"
#include "hallverdict/classifier.hpp"
#include "hallverdict/json_out.hpp"
#include "hallverdict/oracle.hpp"

namespace hv = hallverdict;
using hv::arith::Natural;
using nlohmann::json;

namespace {

// Split a factor list on commas that sit outside parentheses, so
// "Lie(A,1,7),Cyc(2)" yields two descriptors.
std::vector<std::string> split_descriptors(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct ClassifyArgs {
  std::string factors;
  std::string gens_file;
  std::string pi;
  std::string cofinite_pi;
  std::string rule = "gpi";
  bool weyl_excludes_p = false;
};

hv::PrimeSet parse_pi(const ClassifyArgs& a) {
  if (!a.cofinite_pi.empty()) {
    std::string body = a.cofinite_pi;
    const std::string prefix = "excluded:";
    if (body.rfind(prefix, 0) != 0) body = prefix + body;
    return hv::PrimeSet::parse(body);
  }
  if (a.pi.empty()) throw hv::InvalidInputError("--pi is required");
  return hv::PrimeSet::parse(a.pi);
}

int run_classify(const ClassifyArgs& a) {
  hv::PrimeSet pi = parse_pi(a);
  hv::classifier::ClassSpec spec =
      a.rule == "spi" ? hv::classifier::ClassSpec::solvable_pi_groups(pi)
                      : hv::classifier::ClassSpec::all_pi_groups(pi);
  hv::conditions::ConditionOptions opts;
  opts.weyl_excludes_p = a.weyl_excludes_p;

  std::vector<hv::groups::SimpleGroupId> factors;
  if (!a.factors.empty()) {
    for (const auto& d : split_descriptors(a.factors))
      factors.push_back(hv::groups::parse_group(d));
  } else if (!a.gens_file.empty()) {
    auto gens = hv::oracle::load_generators(a.gens_file);
    auto G = hv::oracle::PermGroup::generate(std::move(gens));
    factors = hv::oracle::composition_factors(G);
  } else {
    throw hv::InvalidInputError("classify needs --factors or --gens");
  }
  hv::classifier::Verdict v = hv::classifier::dx_group(factors, spec, opts);
  emit(hv::json_out::verdict(v, spec));
  return v.answer ? 0 : 1;
}

int run_hall(std::uint32_t sym, const std::string& spor, const std::string& pi_text) {
  hv::PrimeSet pi = hv::PrimeSet::parse(pi_text);
  std::vector<hv::catalog::HallRecord> records;
  if (sym > 0) {
    auto rec = hv::catalog::hall_symmetric(sym, pi);
    if (rec) records.push_back(*rec);
  } else {
    auto name = hv::groups::sporadic_from_name(spor);
    if (!name) throw hv::InvalidInputError("unknown sporadic name: " + spor);
    records = hv::catalog::hall_sporadic(*name, pi);
  }
  emit(hv::json_out::hall_records(records));
  return 0;
}

int run_oracle(const std::string& gens_file, const std::string& pi_text,
               const std::string& check) {
  auto gens = hv::oracle::load_generators(gens_file);
  auto G = hv::oracle::PermGroup::generate(std::move(gens));
  json j;
  j["schema"] = 1;
  j["check"] = check;
  j["order"] = G.order();
  j["degree"] = G.degree();
  if (check == "factors") {
    j["factors"] = hv::json_out::factor_list(hv::oracle::composition_factors(G));
    emit(j);
    return 0;
  }
  if (pi_text.empty())
    throw hv::InvalidInputError("oracle --check " + check + " needs --pi");
  hv::PrimeSet pi = hv::PrimeSet::parse(pi_text);
  if (!pi.is_finite() && !hv::oracle::pi_part_of_order(G, pi))
    throw hv::InvalidInputError("cofinite pi rejected for this check");
  j["pi"] = pi.to_string();
  if (check == "dpi") {
    bool dpi = hv::oracle::is_dpi(G, pi);
    j["dpi"] = dpi;
    emit(j);
    return dpi ? 0 : 1;
  }
  if (check == "hall") {
    bool ex = hv::oracle::hall_exists(G, pi);
    j["hall_exists"] = ex;
    emit(j);
    return ex ? 0 : 1;
  }
  if (check == "maximal") {
    j["classes"] =
        hv::json_out::maximal_classes(hv::oracle::pi_maximal_classes(G, pi));
    emit(j);
    return 0;
  }
  throw hv::InvalidInputError("unknown oracle check: " + check);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hall-verdict: conjugacy of X-maximal subgroups in finite groups"};
  app.require_subcommand(1);

  ClassifyArgs cargs;
  auto* classify = app.add_subcommand(
      "classify", "Decide D_X membership from composition factors or generators");
  classify->add_option("--factors", cargs.factors,
                       "comma-separated factor descriptors, e.g. \"Alt(5),Cyc(2)\"");
  classify->add_option("--gens", cargs.gens_file, "permutation generator file");
  classify->add_option("--pi", cargs.pi, "prime set, e.g. \"2,3\" or \"excluded:7\"");
  classify->add_option("--cofinite-pi", cargs.cofinite_pi,
                       "cofinite prime set, e.g. \"excluded:7,11\"");
  classify->add_option("--class", cargs.rule, "class rule: gpi (default) or spi")
      ->check(CLI::IsMember({"gpi", "spi"}));
  classify->add_flag("--weyl-excludes-p", cargs.weyl_excludes_p,
                     "use the Weyl-order test variant that exempts the characteristic");

  std::uint32_t hall_sym = 0;
  std::string hall_spor, hall_pi;
  auto* hall = app.add_subcommand("hall", "Query the embedded Hall-subgroup tables");
  hall->add_option("--sym", hall_sym, "symmetric group degree n");
  hall->add_option("--spor", hall_spor, "sporadic group name");
  hall->add_option("--pi", hall_pi, "prime set")->required();

  std::string arith_op;
  std::vector<std::string> arith_args;
  bool arith_signed = false;
  auto* arith = app.add_subcommand("arith", "Number-theoretic primitives");
  arith->add_option("op", arith_op,
                    "factor | order | rpart | factrpart | prodrpart | estar | "
                    "epsilon | fermat")
      ->required();
  arith->add_option("args", arith_args, "operands");
  arith->add_flag("--signed", arith_signed, "signed variant of prodrpart");

  std::string oracle_gens, oracle_pi, oracle_check = "dpi";
  auto* oracle = app.add_subcommand("oracle", "Brute-force permutation-group checks");
  oracle->add_option("--gens", oracle_gens, "permutation generator file")->required();
  oracle->add_option("--pi", oracle_pi, "prime set");
  oracle->add_option("--check", oracle_check, "dpi | hall | maximal | factors")
      ->check(CLI::IsMember({"dpi", "hall", "maximal", "factors"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) return run_classify(cargs);
    if (hall->parsed()) return run_hall(hall_sym, hall_spor, hall_pi);
    if (oracle->parsed()) return run_oracle(oracle_gens, oracle_pi, oracle_check);
    if (arith->parsed()) {
      json j;
      j["schema"] = 1;
      j["op"] = arith_op;
      auto need = [&](std::size_t k) {
        if (arith_args.size() != k)
          throw hv::InvalidInputError("arith " + arith_op + " needs " +
                                      std::to_string(k) + " operand(s)");
      };
      auto nat = [&](std::size_t i) {
        return hv::arith::parse_natural(arith_args[i]);
      };
      if (arith_op == "factor") {
        need(1);
        auto fz = hv::arith::prime_factorization(nat(0));
        json factors = json::array();
        for (const auto& f : fz.factors)
          factors.push_back({{"prime", f.prime.str()}, {"exponent", f.exponent}});
        j["factors"] = std::move(factors);
      } else if (arith_op == "order") {
        need(2);
        j["result"] = hv::arith::mult_order(nat(0), nat(1)).str();
      } else if (arith_op == "rpart") {
        need(2);
        j["result"] = hv::arith::r_part(nat(0), nat(1)).str();
      } else if (arith_op == "factrpart") {
        need(2);
        j["result"] = hv::arith::factorial_r_part(nat(0), nat(1)).str();
      } else if (arith_op == "prodrpart") {
        need(3);
        j["result"] =
            hv::arith::prod_r_part(nat(0), nat(1), nat(2), arith_signed).str();
      } else if (arith_op == "estar") {
        need(1);
        j["result"] = hv::arith::e_star(nat(0)).str();
      } else if (arith_op == "epsilon") {
        need(1);
        j["result"] = hv::arith::epsilon_of(nat(0));
      } else if (arith_op == "fermat") {
        need(1);
        j["result"] = hv::arith::fermat_prime_test(nat(0));
      } else {
        throw hv::InvalidInputError("unknown arith op: " + arith_op);
      }
      emit(j);
      return 0;
    }
  } catch (const hv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

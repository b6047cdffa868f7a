#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adapted/jobspec.hpp"
#include "adapted/json_io.hpp"

namespace {

using adapted::i64;

struct InputArgs {
  i64 p = 0;
  std::vector<i64> n;
  std::vector<i64> m;
  i64 t = -1;
  i64 g0 = -1;
  std::string input_path;
  std::string format = "text";
};

void add_input_options(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("--p", args.p, "prime order of the automorphism");
  cmd->add_option("--n", args.n, "rotation data n_1,...,n_t")->delimiter(',');
  cmd->add_option("--m", args.m, "multiplicities m_1,...,m_{p-1}")->delimiter(',');
  cmd->add_option("--t", args.t, "fixed point count; only t=0 is accepted here");
  cmd->add_option("--g0", args.g0, "quotient genus");
  cmd->add_option("--input", args.input_path, "JSON description file, or - for stdin");
  cmd->add_option("--format", args.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

adapted::PrimeOrderData parse_data(const InputArgs& args) {
  if (!args.input_path.empty()) {
    nlohmann::json j;
    if (args.input_path == "-") {
      std::stringstream buffer;
      buffer << std::cin.rdbuf();
      j = nlohmann::json::parse(buffer.str(), nullptr, false);
    } else {
      std::ifstream in(args.input_path);
      adapted::require(in.good(), adapted::errc::parse_error,
                       "cannot open " + args.input_path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      j = nlohmann::json::parse(buffer.str(), nullptr, false);
    }
    adapted::require(!j.is_discarded(), adapted::errc::parse_error, "invalid JSON input");
    return adapted::data_from_json(j);
  }
  adapted::require(args.p != 0, adapted::errc::parse_error, "--p is required");
  adapted::require(args.g0 >= 0, adapted::errc::parse_error, "--g0 is required");
  if (!args.n.empty()) return adapted::validate(args.p, args.n, args.g0);
  if (!args.m.empty()) return adapted::validate_from_multiplicities(args.p, args.m, args.g0);
  adapted::require(args.t == 0, adapted::errc::parse_error,
                   "need --n, --m or --t 0 to describe the class");
  return adapted::validate_fixed_point_free(args.p, args.g0);
}

adapted::Format parse_format(const std::string& name) {
  if (name == "json") return adapted::Format::json;
  if (name == "csv") return adapted::Format::csv;
  return adapted::Format::text;
}

adapted::Stage stage_by_name(const std::string& name) {
  using adapted::Stage;
  if (name == "presentation") return Stage::presentation;
  if (name == "basis") return Stage::basis;
  if (name == "action") return Stage::action;
  if (name == "intersection") return Stage::intersection;
  if (name == "canonical") return Stage::canonical;
  if (name == "symplectic") return Stage::symplectic;
  if (name == "verify") return Stage::verify;
  throw adapted::validation_error(adapted::errc::parse_error, "unknown stage " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adapted homology bases for prime-order surface automorphisms"};
  app.require_subcommand(1);

  InputArgs args;
  std::vector<std::string> emit;
  i64 p_max = 0, t_max = 0, g0_max = 0;

  struct Sub {
    CLI::App* cmd;
    std::vector<adapted::Stage> stages;
  };
  std::vector<Sub> subs;
  auto add_stage_command = [&](const std::string& name, const std::string& help,
                               std::vector<adapted::Stage> stages) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_input_options(cmd, args);
    subs.push_back({cmd, std::move(stages)});
    return cmd;
  };

  add_stage_command("presentation", "single-relator presentation of the surface group",
                    {adapted::Stage::presentation})
      ->alias("rewrite");
  add_stage_command("basis", "adapted homology basis labels", {adapted::Stage::basis});
  add_stage_command("action", "integer action matrix on the adapted basis",
                    {adapted::Stage::action})
      ->alias("matrix");
  add_stage_command("intersection", "intersection matrix of the adapted basis",
                    {adapted::Stage::intersection});
  add_stage_command("canonical", "canonical intersection form of matching size",
                    {adapted::Stage::canonical});
  CLI::App* symplectify = add_stage_command(
      "symplectify", "integer change of basis to the canonical symplectic form",
      {adapted::Stage::symplectic});
  bool verify_flag = false;
  symplectify->add_flag("--verify", verify_flag, "re-check all identities afterwards");
  add_stage_command("verify", "run the invariant suite", {adapted::Stage::verify});

  CLI::App* run = app.add_subcommand("run", "emit several stages at once");
  add_input_options(run, args);
  run->add_option("--emit", emit, "comma list of stages")->delimiter(',')->required();
  subs.push_back({run, {}});

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify all classes within bounds");
  sweep_cmd->add_option("--p-max", p_max, "largest prime order")->required();
  sweep_cmd->add_option("--t-max", t_max, "largest fixed point count")->required();
  sweep_cmd->add_option("--g0-max", g0_max, "largest quotient genus")->required();
  sweep_cmd->add_option("--format", args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);

    if (sweep_cmd->parsed()) {
      adapted::SweepReport report =
          adapted::sweep(p_max, t_max, g0_max, args.format == "text" ? &std::cout : nullptr);
      if (args.format == "json") {
        nlohmann::json j{{"cases", report.cases},
                         {"passed", report.passed},
                         {"failures", report.failures}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << report.passed << "/" << report.cases << " classes passed\n";
        for (const auto& f : report.failures) std::cout << "FAIL " << f << '\n';
      }
      return report.failures.empty() ? 0 : 2;
    }

    adapted::JobSpec spec;
    spec.data = parse_data(args);
    spec.format = parse_format(args.format);
    for (const Sub& sub : subs)
      if (sub.cmd->parsed()) spec.stages = sub.stages;
    if (run->parsed())
      for (const auto& name : emit) spec.stages.push_back(stage_by_name(name));
    if (verify_flag) spec.stages.push_back(adapted::Stage::verify);
    adapted::require(!spec.stages.empty(), adapted::errc::parse_error, "no output requested");

    return adapted::run_job(spec, std::cout);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const adapted::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const adapted::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}

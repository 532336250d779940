#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mfib/errors.hpp"

using mfib::cli::Result;
using mfib::cli::RunConfig;
using nlohmann::json;

namespace {

int emit(const Result& r, const std::string& json_out) {
  const std::string text = r.output.dump(2);
  if (json_out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream f(json_out);
    if (!f) {
      std::cerr << json{{"error", "cannot write " + json_out}}.dump() << '\n';
      return mfib::cli::kUsage;
    }
    f << text << '\n';
  }
  return r.code;
}

int fail(int code, const std::string& message) {
  std::cerr << json{{"error", message}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment-map fibers of Grassmannians G(n,2): exact chambers, regularity and explicit n = 4 fibers"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string json_out;
  std::string orbit = "first";
  app.add_option("--n", cfg.n, "number of points n")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "number of random samples")->capture_default_str();
  app.add_option("--tol", cfg.tol, "numerical tolerance");
  app.add_option("--classify", cfg.classify, "rational point, e.g. 1/2,1/2,1/2,1/2");
  app.add_option("--orbit", orbit, "chamber orbit of the fiber point")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
  app.add_option("--json-out", json_out, "write JSON to this file instead of stdout");

  const std::map<std::string, std::function<Result(const RunConfig&)>> handlers = {
      {"chambers", mfib::cli::cmd_chambers},     {"regular", mfib::cli::cmd_regular},
      {"moment", mfib::cli::cmd_moment},         {"fiber", mfib::cli::cmd_fiber},
      {"jacobian", mfib::cli::cmd_jacobian},     {"transition", mfib::cli::cmd_transition},
      {"triangle", mfib::cli::cmd_triangle},     {"curve", mfib::cli::cmd_curve},
      {"report", mfib::cli::cmd_report}};

  app.add_subcommand("chambers", "chambers of the hypersimplex, or classify a point");
  auto* regular = app.add_subcommand("regular", "regular values of mu and mu_tilde");
  regular->add_option("--grid", cfg.grid, "classify every grid point with this denominator");
  auto* moment = app.add_subcommand("moment", "evaluate mu, mu_tilde or mu_hat");
  moment->add_option("--map", cfg.map, "mu | mu_tilde | mu_hat")
      ->check(CLI::IsMember({"mu", "mu_tilde", "mu_hat"}))
      ->capture_default_str();
  moment->add_option("--z", cfg.z, "homogeneous coordinates as re,im pairs");
  moment->add_option("--matrix", cfg.matrix, "2 x n matrix, row-major, as re,im pairs");
  auto* fiber = app.add_subcommand("fiber", "certify random points of an explicit fiber");
  fiber->add_option("kind", cfg.kind, "mq7 | mq5 | m2 | m3")->required();
  app.add_subcommand("jacobian", "rank of the complete-intersection Jacobian");
  app.add_subcommand("transition", "transition function of the principal T^3 bundle");
  app.add_subcommand("triangle", "the triangle P with its vertices and edges");
  auto* curve = app.add_subcommand("curve", "residuals of the curve P' at a point");
  curve->add_option("--x0", cfg.x0)->capture_default_str();
  curve->add_option("--x1", cfg.x1)->capture_default_str();
  auto* report = app.add_subcommand("report", "run the acceptance criteria");
  report->add_option("--only", cfg.only, "run a single criterion by key");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mfib::cli::kUsage;
  }
  cfg.second_orbit = orbit == "second";

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return emit(handlers.at(name)(cfg), json_out);
  } catch (const mfib::cli::UsageError& e) {
    return fail(mfib::cli::kUsage, e.what());
  } catch (const mfib::DomainError& e) {
    return fail(mfib::cli::kUsage, e.what());
  } catch (const mfib::Unsupported& e) {
    return fail(mfib::cli::kUsage, e.what());
  } catch (const mfib::CertificateFailure& e) {
    return fail(mfib::cli::kCertificateFailure, e.what());
  } catch (const std::exception& e) {
    return fail(mfib::cli::kCertificateFailure, e.what());
  }
}

#include "app.hpp"

#include <cstdlib>
#include <iostream>

namespace cli {

App::App() : root_("Exact torsion, cohomology and local-bound computations", "torsionlab") {
  root_.require_subcommand(1);
  root_.fallthrough();
  root_.add_option("--precision", precision_flag_, "Decimal digits for real-valued output (>= 32; default 64)");
  root_.add_option("--threads", threads_, "Worker threads (0 = hardware concurrency)");
}

RunConfig App::config() const {
  RunConfig cfg;
  if (const char* env = std::getenv("TORSIONLAB_PRECISION")) {
    try {
      cfg.digits = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw tl::ValidationError("TORSIONLAB_PRECISION must be a positive integer");
    }
  }
  if (precision_flag_ != 0) cfg.digits = precision_flag_;
  tl::require(cfg.digits >= tl::kMinimumDigits, "precision must be at least " + std::to_string(tl::kMinimumDigits) + " digits");
  cfg.threads = threads_;
  return cfg;
}

CLI::App* App::leaf(CLI::App* parent, const std::string& name, const std::string& help, const std::string& id,
                    Runner run, std::function<Json()> build) {
  runners_[id] = std::move(run);
  CLI::App* sub = parent->add_subcommand(name, help);
  auto verify_path = std::make_shared<std::string>();
  auto out_path = std::make_shared<std::string>();
  sub->add_option("--verify", *verify_path, "Recompute a report written by this command and compare");
  sub->add_option("--out", *out_path, "Write the report here instead of stdout");
  sub->callback([this, id, build = std::move(build), verify_path, out_path] {
    action_ = [this, id, build, verify_path, out_path] { return execute(id, build, *verify_path, *out_path); };
  });
  return sub;
}

int App::execute(const std::string& id, const std::function<Json()>& build, const std::string& verify_path,
                 const std::string& out_path) {
  if (!verify_path.empty()) return verify(id, verify_path);
  RunConfig cfg = config();
  tl::set_working_digits(cfg.digits);
  Json input = build();
  Json result = runners_.at(id)(input, cfg);
  Json report;
  report["format"] = tl::kFormatTag;
  report["command"] = id;
  report["config"] = Json{{"precision", cfg.digits}};
  report["input"] = std::move(input);
  report["result"] = std::move(result);
  const std::string text = tl::dump_json(report);
  if (out_path.empty())
    std::cout << text;
  else
    tl::write_text_file(out_path, text);
  return 0;
}

int App::verify(const std::string& id, const std::string& path) {
  Json report = tl::read_json_file(path);
  tl::require(report.value("format", "") == tl::kFormatTag, path + ": not a " + std::string(tl::kFormatTag) + " report");
  tl::require(report.value("command", "") == id,
              path + ": report was written by \"" + report.value("command", "?") + "\", not \"" + id + "\"");
  RunConfig cfg = config();
  cfg.digits = tl::member(tl::member(report, "config"), "precision").get<unsigned>();
  tl::require(cfg.digits >= tl::kMinimumDigits, "report precision below minimum");
  tl::set_working_digits(cfg.digits);
  Json again = runners_.at(id)(tl::member(report, "input"), cfg);
  const bool ok = again == tl::member(report, "result");
  Json out{{"format", tl::kFormatTag}, {"command", "verify"}, {"target", id}, {"report", path},
           {"status", ok ? "ok" : "mismatch"}};
  if (!ok) {
    Json diff = Json::diff(tl::member(report, "result"), again);
    out["differences"] = diff;
  }
  std::cout << tl::dump_json(out);
  return ok ? 0 : 3;
}

int App::main(int argc, char** argv) {
  try {
    root_.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return root_.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return root_.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return root_.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "torsionlab: " << e.what() << "\n\n" << root_.help();
    return 2;
  } catch (const tl::ValidationError& e) {
    std::cerr << "torsionlab: " << e.what() << "\n";
    return 2;
  }
  if (!action_) {
    std::cerr << root_.help();
    return 2;
  }
  try {
    return action_();
  } catch (const tl::ValidationError& e) {
    std::cerr << "torsionlab: " << e.what() << "\n";
    return 2;
  } catch (const tl::ComputationError& e) {
    std::cerr << "torsionlab: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "torsionlab: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "torsionlab: " << e.what() << "\n";
    return 3;
  }
}

Json strings(const std::vector<tl::Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

std::string real_str(const tl::Real& x, const RunConfig& cfg) { return tl::format_real(x, cfg.digits); }

Json cokernel_json(const tl::CokernelStructure& c) {
  return Json{{"free_rank", c.free_rank}, {"torsion_factors", strings(c.torsion_factors)}};
}

Json cohomology_json(const tl::CohomologyReport& r, const RunConfig& cfg) {
  Json degrees = Json::array();
  for (std::size_t q = 0; q < r.degrees.size(); ++q) {
    const auto& d = r.degrees[q];
    degrees.push_back(Json{{"degree", q},
                           {"free_rank", d.free_rank},
                           {"torsion_factors", strings(d.torsion_factors)},
                           {"torsion_order", d.torsion_order.get_str()},
                           {"log_torsion", real_str(d.log_torsion, cfg)}});
  }
  return Json{{"degrees", std::move(degrees)},
              {"alternating_torsion", r.alternating_torsion().get_str()},
              {"alternating_log_torsion", real_str(r.alternating_log_torsion(), cfg)}};
}

Json sqrt_json(const tl::SqrtRational& x, const RunConfig& cfg) {
  return Json{{"square", x.square().get_str()}, {"value", x.to_string(cfg.digits)}, {"exact", x.is_rational()}};
}

Json read_input(const std::string& path) {
  tl::require(!path.empty(), "missing input file");
  return tl::read_json_file(path);
}

unsigned get_unsigned(const Json& input, const char* key) {
  const Json& v = tl::member(input, key);
  tl::require(v.is_number_integer() && v.get<long long>() >= 0, std::string(key) + " must be a nonnegative integer");
  return v.get<unsigned>();
}

}  // namespace cli

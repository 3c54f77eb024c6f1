#pragma once

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "torsionlab/homology/complex.hpp"
#include "torsionlab/io/json_io.hpp"
#include "torsionlab/linalg/numeric.hpp"
#include "torsionlab/linalg/smith.hpp"
#include "torsionlab/linalg/sqrt_rational.hpp"

namespace tl = torsionlab;

namespace cli {

using tl::Json;

struct RunConfig {
  unsigned digits = tl::kDefaultDigits;
  unsigned threads = 0;
};

/// A pure computation: input JSON (everything needed, files inlined) to
/// result JSON. Reports embed the input so `--verify` can rerun it.
using Runner = std::function<Json(const Json& input, const RunConfig& cfg)>;

class App {
 public:
  App();

  CLI::App& root() { return root_; }

  /// Registers a leaf command. `build` turns the parsed flags into the
  /// input JSON; it is skipped when --verify is given.
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, const std::string& id,
                 Runner run, std::function<Json()> build);

  int main(int argc, char** argv);

 private:
  int execute(const std::string& id, const std::function<Json()>& build, const std::string& verify_path,
              const std::string& out_path);
  int verify(const std::string& id, const std::string& path);
  RunConfig config() const;

  CLI::App root_;
  std::map<std::string, Runner> runners_;
  std::function<int()> action_;
  unsigned precision_flag_ = 0;
  unsigned threads_ = 0;
};

void add_algebra_commands(App& app);
void add_sympow_commands(CLI::App* parent, App& app);
void add_quat_commands(CLI::App* parent, App& app);
void add_local_commands(CLI::App* parent, App& app);
void add_manifold_commands(CLI::App* parent, App& app);
void add_ruelle_commands(CLI::App* parent, App& app);

// ---- shared report fragments ----------------------------------------------

Json strings(const std::vector<tl::Integer>& xs);
std::string real_str(const tl::Real& x, const RunConfig& cfg);
Json cokernel_json(const tl::CokernelStructure& c);
Json cohomology_json(const tl::CohomologyReport& r, const RunConfig& cfg);
Json sqrt_json(const tl::SqrtRational& x, const RunConfig& cfg);
Json read_input(const std::string& path);
/// Input member as an unsigned integer with a range check.
unsigned get_unsigned(const Json& input, const char* key);

}  // namespace cli

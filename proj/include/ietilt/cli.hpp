#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ietilt/ieclosed.hpp"

namespace ietilt::cli {

/// The full pipeline over one algebra.
struct Session {
  AlgebraPtr algebra;
  std::shared_ptr<const Catalog> catalog;
  std::shared_ptr<const TauTheory> tau;
  std::shared_ptr<const TorsionTheory> torsion;
  std::shared_ptr<const IEClosed> ie;
};

/// Uses the interval catalog unless `catalog_json` is given.
Session make_session(AlgebraPtr alg, const std::optional<std::string>& catalog_json = std::nullopt);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Runs every golden table in `golden_dir` against the algebra file it names
/// (resolved inside `data_dir`), optionally over GF(p) instead of the file's field.
std::vector<CheckResult> verify_paper(const std::string& data_dir, const std::string& golden_dir,
                                      std::optional<Scalar> p = std::nullopt);

std::string default_data_dir();

/// Exit status: 0 success, 1 verification or consistency failure, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ietilt::cli

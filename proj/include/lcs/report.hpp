#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

namespace lcs {

/// Machine-readable command report. Checks are named booleans; exit code 0
/// means every check passed.
class Report {
  public:
    explicit Report(const std::string& command);

    void input(const std::string& key, const std::string& value);
    void check(const std::string& name, bool ok);
    void witness(const std::string& text);
    void data(const std::string& key, const nlohmann::json& value);

    bool all_ok() const { return all_ok_; }
    nlohmann::json finish();

    /// Prints the human-readable summary and optionally writes JSON.
    /// Returns the process exit code (0 pass, 1 check failure).
    int emit(const std::string& json_path, bool quiet = false);

  private:
    nlohmann::json j_;
    bool all_ok_ = true;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace lcs

#include "lcs/report.hpp"

#include <fstream>
#include <iostream>

namespace lcs {

Report::Report(const std::string& command) : start_(std::chrono::steady_clock::now()) {
    j_["schema_version"] = 1;
    j_["command"] = command;
    j_["inputs"] = nlohmann::json::object();
    j_["checks"] = nlohmann::json::object();
    j_["witnesses"] = nlohmann::json::array();
}

void Report::input(const std::string& key, const std::string& value) { j_["inputs"][key] = value; }

void Report::check(const std::string& name, bool ok) {
    j_["checks"][name] = ok;
    all_ok_ = all_ok_ && ok;
}

void Report::witness(const std::string& text) { j_["witnesses"].push_back(text); }

void Report::data(const std::string& key, const nlohmann::json& value) { j_[key] = value; }

nlohmann::json Report::finish() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    j_["timing_ms"] = ms;
    j_["ok"] = all_ok_;
    return j_;
}

int Report::emit(const std::string& json_path, bool quiet) {
    nlohmann::json out = finish();
    if (!quiet) {
        for (auto& [name, ok] : out["checks"].items())
            std::cout << (ok.get<bool>() ? "pass" : "FAIL") << "  " << name << "\n";
        for (auto& w : out["witnesses"]) std::cout << "  witness: " << w.get<std::string>() << "\n";
    }
    if (!json_path.empty()) {
        if (json_path == "-") {
            std::cout << out.dump(2) << "\n";
        } else {
            std::ofstream f(json_path);
            if (!f) {
                std::cerr << "cannot write " << json_path << "\n";
                return 2;
            }
            f << out.dump(2) << "\n";
        }
    }
    return all_ok_ ? 0 : 1;
}

}  // namespace lcs

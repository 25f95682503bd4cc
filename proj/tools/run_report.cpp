#include "run_report.hpp"

#include <cstdio>

namespace wheelfree::cli {

RunReport::RunReport(std::string command, std::string input) {
  line("report", command);
  line("version", kVersion);
  line("input", input);
}

void RunReport::begin_graph(long long index) {
  text_.push_back('\n');
  line("graph", index);
}

void RunReport::line(std::string_view key, std::string_view value) {
  text_.append(key);
  text_.push_back(':');
  if (!value.empty()) {
    text_.push_back(' ');
    text_.append(value);
  }
  text_.push_back('\n');
}

void RunReport::raw(std::string_view text) { text_.append(text); }

long long RunReport::counted(const std::string& key) const {
  auto it = summary_.find(key);
  return it == summary_.end() ? 0 : it->second;
}

std::string RunReport::finish(int exit_code, double elapsed_ms) const {
  std::string out = text_;
  out += "\nsummary:";
  for (const auto& [key, value] : summary_) out += " " + key + "=" + std::to_string(value);
  out.push_back('\n');
  if (elapsed_ms >= 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed-ms: %.1f\n", elapsed_ms);
    out += buf;
  }
  out += "exit: " + std::to_string(exit_code) + "\n";
  return out;
}

}  // namespace wheelfree::cli

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wheelfree::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitCounterexample = 1, kExitUsage = 2 };

// Report schema:
//
//   report: <command>
//   version: <version>
//   input: <descriptor>
//
//   graph: <index>            one block per input graph
//   <key>: <value>            command specific, certificates inlined
//
//   summary: <key>=<count> ...
//   elapsed-ms: <ms>          only with --timing
//   exit: <code>
class RunReport {
 public:
  RunReport(std::string command, std::string input);

  /// Starts a per-graph block.
  void begin_graph(long long index);
  void line(std::string_view key, std::string_view value);
  void line(std::string_view key, long long value) { line(key, std::to_string(value)); }
  /// Appends pre-rendered "key: value" lines verbatim.
  void raw(std::string_view text);

  void count(const std::string& key, long long by = 1) { summary_[key] += by; }
  long long counted(const std::string& key) const;

  /// Writes the report; `elapsed_ms < 0` omits timing.
  std::string finish(int exit_code, double elapsed_ms = -1) const;

 private:
  std::string text_;
  std::map<std::string, long long> summary_;
};

}  // namespace wheelfree::cli

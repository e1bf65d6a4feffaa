// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [path-to-gcliff]   (the CLI is needed for the determinism check)

#include "gcliff/acceptance.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

std::optional<std::string> capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gcliff::acceptance;
  SuiteConfig cfg;
  bool all = true;
  for (const auto& run : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = run(cfg);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = {{"exception", e.what()}};
    }
    auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && r.passed;
    std::printf("%s criterion %d: %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), s);
    if (!r.passed) std::printf("  %s\n", r.detail.dump().c_str());
  }

  bool deterministic = false;
  if (argc > 1) {
    auto t0 = std::chrono::steady_clock::now();
    std::string cmd = std::string(argv[1]) + " verify-all --prime 13 --seed 0 --output json 2>/dev/null";
    auto first = capture(cmd), second = capture(cmd);
    deterministic = first && second && !first->empty() && *first == *second;
    auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion 11: verify-all output is byte-identical across runs (%zu bytes, %.2f s)\n",
                deterministic ? "PASS" : "FAIL", first ? first->size() : 0, s);
  } else {
    std::printf("FAIL criterion 11: no CLI path given\n");
  }
  all = all && deterministic;
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}

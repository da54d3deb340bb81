#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "splitjac/perm.hpp"
#include "splitjac/rational.hpp"

#ifndef SPLITJAC_REPO_DIR
#error "tests need SPLITJAC_REPO_DIR"
#endif

namespace testutil {

inline nlohmann::json load_json(const std::string& relpath) {
  std::string path = std::string(SPLITJAC_REPO_DIR) + "/" + relpath;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return nlohmann::json::parse(in);
}

inline nlohmann::json oracle_entry(const std::string& name) {
  static nlohmann::json fixtures = load_json("data/fixtures/oracle.json");
  return fixtures.at("entries").at(name).at("value");
}

// Small random rationals, never zero-denominator. The two-argument mpq
// constructor skips canonicalization, so do it here.
inline splitjac::Rational random_rational(std::mt19937& rng, int bound = 6) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  splitjac::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline splitjac::Perm random_perm(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return splitjac::Perm::from_images(img);
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stdout captured; stderr passes through to the test log.
inline CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPLITJAC_CLI_BIN) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testutil

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "guise/model.hpp"

namespace guise::testing {

GuiseModel load_text(const std::string& text);
GuiseModel load_fixture(const std::string& name);
std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);

MarkSet set_of(const GuiseModel& model, const std::string& marks);  // "a c" -> {a, c}

// Plain fixpoint over (body, head) pairs, written without MarkSet helpers.
struct OracleRule {
  std::vector<int> body;
  int head = -1;  // -1 is falsum
};
std::vector<bool> oracle_closure(std::vector<bool> x, const std::vector<OracleRule>& rules);
std::vector<OracleRule> oracle_rules(const GuiseModel& model);
std::vector<bool> to_bits(MarkSet s, std::size_t n);
MarkSet from_bits(const std::vector<bool>& bits);

struct RandomModelOptions {
  std::size_t min_marks = 1;
  std::size_t max_marks = 4;
  std::size_t max_rules = 6;
  std::size_t max_body = 3;
  bool templates = false;       // template-restricted policy, closed base
  bool subset_guises = true;    // declare every subset of P as a guise
  bool falsum_rules = false;
  std::string world_policy;     // empty -> default
};

// Random model document text; templates, if requested, are closed under
// derived singletons so the template base is T-closed.
std::string random_model_text(std::mt19937_64& rng, const RandomModelOptions& options);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;  // first few, human readable
  void fail(std::string what);
};

SuiteResult closure_law_suite(std::uint64_t seed, std::size_t theories = 200, std::size_t max_marks = 6);
SuiteResult witness_criterion_suite(std::uint64_t seed, std::size_t theories_per_size = 25);
SuiteResult galois_suite(std::uint64_t seed, std::size_t theories_per_size = 10);
SuiteResult consequence_axiom_suite(std::uint64_t seed, std::size_t theories_per_size = 10);
SuiteResult relation_axiom_suite(std::uint64_t seed, std::size_t theories_per_size = 10);
SuiteResult announcement_suite(std::uint64_t seed, std::size_t theories_per_size = 10);

}  // namespace guise::testing

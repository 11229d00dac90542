#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bilax {

struct CoherenceEntry {
  std::string id;
  std::string paper_ref;  // what the diagram asserts, in words
  std::string objects;
  double deviation = 0;
  bool pass = false;
};

struct CoherenceReport {
  std::string group;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::vector<CoherenceEntry> entries;

  void add(std::string id, std::string paper_ref, std::string objects, double deviation);
  // Sorted by id, then object tuple; the order every serialisation uses.
  void sort();
  bool all_pass() const;
  double max_deviation(const std::string& id_prefix = "") const;
  std::string to_json() const;
};

}  // namespace bilax

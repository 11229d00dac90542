#include "bilax/report.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

namespace bilax {

void CoherenceReport::add(std::string id, std::string paper_ref, std::string objects, double deviation) {
  // NaN must fail, so compare in the passing direction.
  const bool pass = deviation <= tolerance;
  entries.push_back(CoherenceEntry{std::move(id), std::move(paper_ref), std::move(objects), deviation, pass});
}

void CoherenceReport::sort() {
  std::stable_sort(entries.begin(), entries.end(), [](const CoherenceEntry& a, const CoherenceEntry& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.objects < b.objects;
  });
}

bool CoherenceReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const CoherenceEntry& e) { return e.pass; });
}

double CoherenceReport::max_deviation(const std::string& id_prefix) const {
  double out = 0;
  for (const auto& e : entries)
    if (e.id.compare(0, id_prefix.size(), id_prefix) == 0) {
      if (std::isnan(e.deviation)) return e.deviation;
      out = std::max(out, e.deviation);
    }
  return out;
}

std::string CoherenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["tolerance"] = tolerance;
  j["seed"] = seed;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["id"] = e.id;
    row["paper_ref"] = e.paper_ref;
    row["objects"] = e.objects;
    // JSON has no NaN; a failed evaluation is reported as null.
    if (std::isfinite(e.deviation))
      row["deviation"] = e.deviation;
    else
      row["deviation"] = nullptr;
    row["pass"] = e.pass;
    arr.push_back(std::move(row));
  }
  j["entries"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace bilax

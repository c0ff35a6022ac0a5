#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/graded.hpp"

namespace hopf {

/// Global basis of a connected graded space up to degree N. Indices are
/// grouped by degree; index 0 is the unit in degree 0.
class Basis {
 public:
  Basis() : Basis(0, {{"1"}}) {}

  Basis(int bound, std::vector<std::vector<std::string>> labels) : bound_(bound) {
    if (bound < 0) throw DomainError("hopf_core", "negative truncation bound");
    labels.resize(bound + 1);
    if (labels[0].size() != 1) throw StructuralError("hopf_core", "connected basis needs exactly one degree-0 element", 0);
    start_.assign(bound + 2, 0);
    for (int d = 0; d <= bound; ++d) {
      start_[d] = static_cast<int>(labels_.size());
      for (auto& l : labels[d]) {
        if (!by_label_.emplace(l, static_cast<int>(labels_.size())).second)
          throw ValidationError("hopf_core", "duplicate basis label " + l, d);
        labels_.push_back(std::move(l));
        degree_.push_back(d);
      }
    }
    start_[bound + 1] = static_cast<int>(labels_.size());
  }

  int bound() const noexcept { return bound_; }
  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int degree(int i) const { return degree_.at(i); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  int begin(int d) const { return d < 0 ? 0 : d > bound_ ? size() : start_[d]; }
  int end(int d) const { return d < 0 ? 0 : d > bound_ ? size() : start_[d + 1]; }
  int dim(int d) const { return end(d) - begin(d); }
  /// Ordinal of index i inside its degree.
  int local(int i) const { return i - start_[degree(i)]; }

  int index_of(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw ValidationError("hopf_core", "unknown basis label " + label);
    return it->second;
  }
  bool has_label(const std::string& label) const { return by_label_.count(label) > 0; }

  std::vector<std::vector<std::string>> labels_by_degree(bool reduced) const {
    std::vector<std::vector<std::string>> out(bound_ + 1);
    for (int i = reduced ? 1 : 0; i < size(); ++i) out[degree_[i]].push_back(labels_[i]);
    return out;
  }

  GradedSpace space(const Field& f) const { return GradedSpace(f, bound_, labels_by_degree(false)); }
  /// The augmentation ideal, as a reduced graded space.
  GradedSpace reduced_space(const Field& f) const { return GradedSpace(f, bound_, labels_by_degree(true)); }

  friend bool operator==(const Basis& a, const Basis& b) { return a.bound_ == b.bound_ && a.labels_ == b.labels_ && a.degree_ == b.degree_; }

 private:
  int bound_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> degree_;
  std::vector<int> start_;
  std::map<std::string, int> by_label_;
};

}  // namespace hopf

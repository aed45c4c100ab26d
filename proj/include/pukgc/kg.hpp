#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pukgc/triple.hpp"

namespace pukgc {

struct LoadReport {
  std::size_t entity_count = 0;
  std::size_t relation_count = 0;
  std::size_t train_count = 0;
  std::size_t valid_count = 0;
  std::size_t test_count = 0;
  std::size_t negative_count = 0;
  // Entities/relations never seen in train; they keep random embeddings and
  // cannot be ranked well, so they are reported rather than rejected.
  std::size_t cold_start_entities = 0;
  std::size_t cold_start_relations = 0;

  std::string to_json() const;
};

// Id-mapped triple store. Immutable after load; safe for concurrent reads.
class KnowledgeGraph {
 public:
  std::int32_t entity_count() const { return static_cast<std::int32_t>(entity_labels_.size()); }
  std::int32_t relation_count() const { return static_cast<std::int32_t>(relation_labels_.size()); }

  const std::vector<Triple>& train() const { return train_; }
  const std::vector<Triple>& valid() const { return valid_; }
  const std::vector<Triple>& test() const { return test_; }
  const std::vector<Triple>& true_negatives() const { return true_negatives_; }

  const std::vector<std::string>& entity_labels() const { return entity_labels_; }
  const std::vector<std::string>& relation_labels() const { return relation_labels_; }

  // Membership in train ∪ valid ∪ test (the filtered-setting index).
  bool is_known(const Triple& t) const { return known_.count(t) != 0; }

  // Sorted distinct tails t with <h,r,t> in some split; empty vector if none.
  const std::vector<std::int32_t>& known_tails(std::int32_t head, std::int32_t relation) const;
  const std::vector<std::int32_t>& known_heads(std::int32_t relation, std::int32_t tail) const;

  // Annotated true negatives grouped for batch assembly.
  const std::vector<std::int32_t>& negative_tails(std::int32_t head, std::int32_t relation) const;
  const std::vector<std::int32_t>& negative_heads(std::int32_t relation, std::int32_t tail) const;

  const LoadReport& report() const { return report_; }

  // Builds a graph from in-memory id triples. Label vectors give the vocab
  // sizes; splits must be pairwise disjoint and index only valid ids.
  static KnowledgeGraph from_triples(std::vector<std::string> entity_labels,
                                     std::vector<std::string> relation_labels,
                                     std::vector<Triple> train,
                                     std::vector<Triple> valid,
                                     std::vector<Triple> test,
                                     std::vector<Triple> true_negatives = {});

 private:
  friend KnowledgeGraph load_graph(const std::string&, const std::string&, const std::string&,
                                   const std::optional<std::string>&);

  void build_indexes();
  void validate() const;

  std::vector<Triple> train_, valid_, test_, true_negatives_;
  std::vector<std::string> entity_labels_, relation_labels_;
  std::unordered_set<Triple, TripleHash> known_;
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> known_tails_, known_heads_;
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> negative_tails_, negative_heads_;
  LoadReport report_;
};

// Reads UTF-8 TSV files, one `head<TAB>relation<TAB>tail` triple per line.
// Ids are assigned by first appearance across train, then valid, then test
// (then negatives), so runs are reproducible byte-for-byte.
KnowledgeGraph load_graph(const std::string& train_path, const std::string& valid_path,
                          const std::string& test_path,
                          const std::optional<std::string>& negatives_path = std::nullopt);

}  // namespace pukgc

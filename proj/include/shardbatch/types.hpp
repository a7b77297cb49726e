// Copyright 2026 The shardbatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHARDBATCH_TYPES_HPP_
#define SHARDBATCH_TYPES_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shardbatch/status.hpp"

namespace shardbatch {

// 16-byte document identifier: 4-byte client id, 4-byte counter high
// bits, 8-byte counter low bits, all big-endian. Generated client side,
// so uniqueness needs no cluster coordination.
struct DocId {
  std::array<uint8_t, 16> bytes{};

  auto operator<=>(const DocId&) const = default;

  std::string to_hex() const;
  static std::optional<DocId> from_hex(std::string_view hex);
  static DocId make(uint32_t client_id, uint32_t counter_hi, uint64_t counter_lo);
};

// Counter-based DocId source. One instance per logical writer.
class DocIdGenerator {
 public:
  explicit DocIdGenerator(uint32_t client_id) : client_id_(client_id) {}

  DocId next() {
    uint64_t lo = counter_lo_++;
    if (counter_lo_ == 0) ++counter_hi_;
    return DocId::make(client_id_, counter_hi_, lo);
  }

 private:
  uint32_t client_id_;
  uint32_t counter_hi_ = 0;
  uint64_t counter_lo_ = 0;
};

// One per-node per-minute metric sample; the unit of ingest and query.
struct MetricDocument {
  DocId doc_id;
  std::string node_id;
  int64_t timestamp = 0;  // epoch seconds; minute-aligned for generated data
  std::map<std::string, double> metrics;

  bool operator==(const MetricDocument&) const = default;
};

// Compound routing key (node_id, timestamp). Sentinels order below and
// above every concrete key; member order makes the defaulted comparison
// exactly the documented total order.
struct ShardKey {
  enum class Kind : uint8_t { kMin = 0, kConcrete = 1, kMax = 2 };

  Kind kind = Kind::kConcrete;
  std::string node_id;
  int64_t timestamp = 0;

  auto operator<=>(const ShardKey&) const = default;

  static ShardKey Min() { return ShardKey{Kind::kMin, "", 0}; }
  static ShardKey Max() { return ShardKey{Kind::kMax, "", 0}; }
  static ShardKey Of(std::string node, int64_t ts) {
    return ShardKey{Kind::kConcrete, std::move(node), ts};
  }

  bool is_sentinel() const { return kind != Kind::kConcrete; }
  std::string to_string() const;
};

inline ShardKey shard_key_of(const MetricDocument& doc) {
  return ShardKey::Of(doc.node_id, doc.timestamp);
}

inline std::strong_ordering compare_keys(const ShardKey& a, const ShardKey& b) {
  return a <=> b;
}

// Half-open shard-key range owned by exactly one shard.
struct ChunkRange {
  uint64_t chunk_id = 0;
  ShardKey lo;  // inclusive
  ShardKey hi;  // exclusive
  std::string owner_shard;
  uint64_t approx_doc_count = 0;

  bool operator==(const ChunkRange&) const = default;
};

inline bool key_in_range(const ShardKey& k, const ChunkRange& r) {
  return r.lo <= k && k < r.hi;
}

// Routing metadata for one collection: a sorted, contiguous partition of
// the full keyspace plus the endpoint of every shard that has ever owned
// a chunk. ownership_changed records whether any split ever reassigned a
// range to a different shard; once true, historical document placement
// can differ from current owners and reads must scatter.
struct ShardMap {
  uint64_t version = 0;
  std::string collection;
  std::vector<ChunkRange> chunks;                     // sorted by lo
  std::map<std::string, std::string> shard_endpoints; // shard id -> host:port
  std::vector<std::string> index_fields;
  bool ownership_changed = false;

  bool operator==(const ShardMap&) const = default;

  // Contiguity, full coverage, owners present in shard_endpoints.
  Status validate() const;

  // The unique chunk containing k. Requires a valid map and concrete k.
  const ChunkRange* chunk_for(const ShardKey& k) const;
};

// Conjunctive two-field filter (plus exact doc_id); the only query shape
// the find path supports.
struct Filter {
  std::optional<std::set<std::string>> node_ids;
  std::optional<int64_t> ts_lo;  // inclusive
  std::optional<int64_t> ts_hi;  // exclusive
  std::optional<DocId> doc_id;

  bool operator==(const Filter&) const = default;

  // At least one clause; node_ids non-empty when present; ts_lo < ts_hi
  // when both present.
  Status validate() const;
};

bool matches(const MetricDocument& doc, const Filter& f);

// Partition of a job's unique hosts into cluster roles.
struct RoleAssignment {
  std::vector<std::string> config_nodes;
  std::vector<std::string> shard_nodes;
  std::vector<std::string> router_nodes;
  std::vector<std::string> client_nodes;

  bool operator==(const RoleAssignment&) const = default;
};

// Synthetic user-job metadata; the query benchmark derives filters and
// exact expected result counts from these.
struct JobRecord {
  std::string job_id;
  std::set<std::string> node_ids;
  int64_t start = 0;            // epoch seconds, minute-aligned
  int64_t duration_minutes = 0; // >= 1

  bool operator==(const JobRecord&) const = default;

  int64_t end() const { return start + duration_minutes * 60; }
  uint64_t expected_docs() const {
    return node_ids.size() * static_cast<uint64_t>(duration_minutes);
  }
};

struct InsertError {
  uint64_t batch_index = 0;
  std::string code;
  std::string message;

  bool operator==(const InsertError&) const = default;
};

// Outcome of one unordered batch insert. inserted_count + errors.size()
// always equals the submitted batch size.
struct InsertManyResult {
  uint64_t inserted_count = 0;
  std::vector<InsertError> errors;

  bool operator==(const InsertManyResult&) const = default;
};

}  // namespace shardbatch

#endif  // SHARDBATCH_TYPES_HPP_

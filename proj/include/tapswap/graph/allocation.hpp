// Copyright 2026 The tapswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tapswap {

/**
 * Bijection between logical tokens and physical vertices, stored in both
 * directions.
 */
class Allocation {
 public:
  Allocation() = default;
  /** token_to_vertex[q] is the vertex holding token q. */
  explicit Allocation(std::vector<int> token_to_vertex);

  static Allocation identity(int n);
  static Allocation from_vertex_tokens(std::vector<int> vertex_to_token);

  int size() const { return static_cast<int>(to_vertex_.size()); }
  int vertex_of(int token) const { return to_vertex_[token]; }
  int token_at(int vertex) const { return to_token_[vertex]; }
  const std::vector<int>& to_vertex() const { return to_vertex_; }
  const std::vector<int>& to_token() const { return to_token_; }

  /** Exchanges the tokens sitting at vertices u and v. */
  void swap_vertices(int u, int v);

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.to_vertex_ == b.to_vertex_;
  }

  /** `t:v` pairs separated by spaces. */
  std::string to_string() const;

 private:
  std::vector<int> to_vertex_;
  std::vector<int> to_token_;
};

}  // namespace tapswap

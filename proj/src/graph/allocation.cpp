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

#include "tapswap/graph/allocation.hpp"

#include <numeric>
#include <sstream>

namespace tapswap {

Allocation::Allocation(std::vector<int> token_to_vertex)
    : to_vertex_(std::move(token_to_vertex)), to_token_(to_vertex_.size(), -1) {
  const int n = size();
  for (int q = 0; q < n; ++q) {
    const int v = to_vertex_[q];
    if (v < 0 || v >= n || to_token_[v] != -1) {
      throw std::invalid_argument(
          "allocation is not a bijection (token " + std::to_string(q) +
          " -> vertex " + std::to_string(v) + ")");
    }
    to_token_[v] = q;
  }
}

Allocation Allocation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Allocation(std::move(v));
}

Allocation Allocation::from_vertex_tokens(std::vector<int> vertex_to_token) {
  const int n = static_cast<int>(vertex_to_token.size());
  std::vector<int> to_vertex(n, -1);
  for (int v = 0; v < n; ++v) {
    const int q = vertex_to_token[v];
    if (q < 0 || q >= n || to_vertex[q] != -1) {
      throw std::invalid_argument(
          "vertex assignment is not a bijection (vertex " + std::to_string(v) +
          " -> token " + std::to_string(q) + ")");
    }
    to_vertex[q] = v;
  }
  return Allocation(std::move(to_vertex));
}

void Allocation::swap_vertices(int u, int v) {
  const int a = to_token_[u];
  const int b = to_token_[v];
  to_token_[u] = b;
  to_token_[v] = a;
  to_vertex_[a] = v;
  to_vertex_[b] = u;
}

std::string Allocation::to_string() const {
  std::ostringstream out;
  for (int q = 0; q < size(); ++q) {
    if (q) out << ' ';
    out << q << ':' << to_vertex_[q];
  }
  return out.str();
}

}  // namespace tapswap

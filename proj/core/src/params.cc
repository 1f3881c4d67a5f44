// Copyright 2026 The limpsim Authors.
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

#include "limpsim/params.h"

#include <string>

#include "limpsim/error.h"

namespace limpsim {

void ClusterParams::Validate() const {
  if (nodes < kMinClusterNodes) {
    ThrowInvalidParams("cluster needs at least 3 nodes for a 3-node pipeline, got n=" +
                       std::to_string(nodes));
  }
}

void WorkloadParams::Validate() const {
  if (requests < 0) {
    ThrowInvalidParams("request count must be non-negative, got r=" +
                       std::to_string(requests));
  }
}

void RegenParams::Validate() const {
  if (nodes < kMinRegenNodes) {
    ThrowInvalidParams("regeneration model needs at least 5 nodes, got n=" +
                       std::to_string(nodes));
  }
  if (lost_blocks < 0) {
    ThrowInvalidParams("lost block count must be non-negative, got b=" +
                       std::to_string(lost_blocks));
  }
}

}  // namespace limpsim

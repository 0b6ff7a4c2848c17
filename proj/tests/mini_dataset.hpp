// Copyright 2026 The bitext-tools Authors
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

#ifndef BITEXT_TESTS_MINI_DATASET_HPP
#define BITEXT_TESTS_MINI_DATASET_HPP

#include <filesystem>
#include <string>

#include "bitext/pipeline.hpp"

namespace bitext {
namespace testdata {

inline std::filesystem::path mini_dataset_dir() {
  return std::filesystem::path(BITEXT_SOURCE_DIR) / "tests" / "data" / "mini";
}

// The bundled dataset's config uses paths relative to its own directory;
// this loader rewrites them as absolute and points output_dir at `out_dir`.
inline PipelineConfig load_mini_config(const std::filesystem::path& out_dir) {
  const std::filesystem::path dir = mini_dataset_dir();
  PipelineConfig cfg =
      pipeline_config_from_json(read_json_file(dir / "config.json"), dir);
  for (InputSpec& spec : cfg.inputs) {
    for (std::string& path : spec.paths) path = (dir / path).string();
  }
  for (ReservedSpec& spec : cfg.reserved) {
    spec.src_path = (dir / spec.src_path).string();
    spec.tgt_path = (dir / spec.tgt_path).string();
  }
  cfg.output_dir = out_dir.string();
  return cfg;
}

}  // namespace testdata
}  // namespace bitext

#endif  // BITEXT_TESTS_MINI_DATASET_HPP

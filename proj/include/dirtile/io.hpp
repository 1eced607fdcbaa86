#pragma once

#include <string>
#include <string_view>

#include "dirtile/alignment.hpp"
#include "dirtile/patch.hpp"

namespace dirtile {

// One JSON document per object. Writers are deterministic; readers throw
// SchemaError with a line:column or field path.

std::string patch_to_json(const TilingPatch& patch);
TilingPatch patch_from_json(std::string_view text);
// 64-bit FNV-1a over patch_to_json, as 16 hex digits.
std::string patch_digest(const TilingPatch& patch);

struct PatchReference {
  int m = 0;
  int n = 0;
  SignCode code;
  int radius = 0;
  std::string digest;

  static PatchReference of(const TilingPatch& patch);
  friend bool operator==(const PatchReference&, const PatchReference&) = default;
};

struct ReversalDocument {
  PatchReference patch;
  EdgeReversal tau;
};

std::string reversal_to_json(const TilingPatch& patch, const EdgeReversal& tau);
ReversalDocument reversal_from_json(std::string_view text);
// Also checks the reference against the patch.
EdgeReversal reversal_from_json(std::string_view text, const TilingPatch& patch);

std::string scheme_to_json(const ReflectionScheme& scheme);
ReflectionScheme scheme_from_json(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dirtile

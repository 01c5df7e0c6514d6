#pragma once

#include <string>
#include <vector>

#include "hg/byott.hpp"
#include "hg/formulas.hpp"

namespace hg {

// JSON is the machine-readable format and must be byte-deterministic for
// fixed inputs, so timings are zeroed there unless explicitly requested.
struct RenderOptions {
    bool include_elapsed = false;
};

std::string count_json(const HGCountReport& rep, const RenderOptions& opts = {});
std::string full_json(const FullReport& rep, const RenderOptions& opts = {});
std::string formula_json(const std::vector<CountValue>& rows);

std::string count_text(const HGCountReport& rep);
std::string full_text(const FullReport& rep);
std::string formula_text(const std::vector<CountValue>& rows);

}  // namespace hg

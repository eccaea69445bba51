#pragma once

// Text and structured (sorted-key JSON) renderings of tables, correspondence
// reports and the order-648 report. Structured output is byte-stable.

#include <string>
#include <vector>

#include "charcorr/chartab.hpp"
#include "charcorr/mckay.hpp"
#include "charcorr/showcase.hpp"

namespace charcorr {

enum class Format { text, structured };

/// "text" or "structured"; InputError otherwise.
Format parse_format(const std::string& s);

std::string render_table(const CharacterTable& t, Format f);

/// One verified or refused instance.
struct InstanceOutcome {
  std::string label;  // corpus file name or group name
  CorrespondenceReport report;
  std::string refusal;  // nonempty when the descent hypotheses fail
};

/// Outcome for an instance whose hypotheses fail: flags and counts only.
InstanceOutcome refused_outcome(std::string label, const McKayInstance& inst);

/// Counts agree on every instance, and every instance that ran has a true verdict.
bool outcomes_ok(const std::vector<InstanceOutcome>& outs);

std::string render_outcomes(const std::vector<InstanceOutcome>& outs, Format f);

std::string render_remark(const RemarkReport& r, Format f);

}  // namespace charcorr

#pragma once

#include <string>

#include "json.hpp"
#include "sgps/lemmas.hpp"

namespace sgps {

/// Field order in reports is fixed, so identical runs dump identical bytes.
using ojson = nlohmann::ordered_json;

ojson validation_json(const ValidationReport& rep);
ojson ideal_json(const FiniteRing& r, const Ideal& ideal);
ojson profile_json(const FiniteRing& r, const PropertyProfile& p);
ojson hypothesis_json(const FiniteRing& r, const HypothesisProfile& h);
ojson verdict_json(const McCoyVerdict& v);
ojson lemma_json(const LemmaReport& rep);
ojson exploration_json(const ExplorationReport& rep);

/// Writes via a temp file in the same directory followed by a rename.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace sgps

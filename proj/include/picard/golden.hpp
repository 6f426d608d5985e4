#pragma once

#include <string>
#include <vector>

#include "picard/arch_characters.hpp"
#include "picard/hecke_local.hpp"
#include "picard/report.hpp"
#include "picard/stabilizer.hpp"

namespace picard {

// The golden corpus: one canonical JSON file per named display, an index,
// and the ledger of expected transcription divergences.

struct GoldenItem {
    std::string path;   // relative to the corpus directory
    std::string anchor; // display identifier
    std::string content;
};

// canonical JSON payloads (also used by the command line front end)
std::string character_json(Packet p, Chamber c);
std::string cd_json(TestObject obj, Chamber c);
std::string dcoeff_json(TestObject obj, Parabolic p);
std::string psum_json(const CaseId& id);
std::string stage_json(Side side, int k, Stage stage);
std::string combined_json(int k);
std::string theorem_json();
std::string constants_json();
std::string flags_json();

// every corpus item, deterministic order; index.json and flags.json included
std::vector<GoldenItem> golden_corpus();

// write the corpus under dir (creating directories)
void write_corpus(const std::string& dir);

// engine-vs-corpus comparison plus the divergence ledger entries
Report verify_corpus(const std::string& dir);

} // namespace picard

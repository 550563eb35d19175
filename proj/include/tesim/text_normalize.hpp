#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tesim {

std::string to_lower(std::string_view s);

// Collapses whitespace runs (space, tab, newline) to single spaces and trims.
std::string collapse_whitespace(std::string_view s);

// Canonical form used throughout: lowercased, whitespace-collapsed, trimmed.
std::string normalize(std::string_view s);

// normalize() plus removal of a leading article ("a", "an", "the").
// This is the form concept linking operates on.
std::string link_normalize(std::string_view s);

// Lowercase word tokens (letters, digits, internal hyphens/apostrophes).
// Punctuation is dropped. Used for bag-of-words processing.
std::vector<std::string> tokenize_words(std::string_view s);

// Candidate lemmas for a lowercase word: the word itself plus simple
// suffix-stripped variants (s, es, ed, ing, d, ies->y and the e-restoring
// forms). Order is deterministic; duplicates removed.
std::vector<std::string> lemma_candidates(std::string_view word);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

}  // namespace tesim

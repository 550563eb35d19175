#include "tesim/text_normalize.hpp"

#include <algorithm>
#include <cctype>

namespace tesim {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::string normalize(std::string_view s) {
  return collapse_whitespace(to_lower(s));
}

std::string link_normalize(std::string_view s) {
  std::string n = normalize(s);
  for (std::string_view art : {"a ", "an ", "the "}) {
    if (starts_with(n, art)) {
      n.erase(0, art.size());
      break;
    }
  }
  return n;
}

std::vector<std::string> tokenize_words(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (is_word_char(c)) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if ((c == '-' || c == '\'') && !cur.empty() && i + 1 < s.size() &&
               is_word_char(s[i + 1])) {
      cur.push_back(c);
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> lemma_candidates(std::string_view word) {
  std::vector<std::string> out;
  auto add = [&out](std::string s) {
    if (s.empty()) return;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  std::string w(word);
  add(w);
  if (ends_with(w, "ies") && w.size() > 3) add(w.substr(0, w.size() - 3) + "y");
  if (ends_with(w, "ied") && w.size() > 3) add(w.substr(0, w.size() - 3) + "y");
  if (ends_with(w, "es") && w.size() > 2) add(w.substr(0, w.size() - 2));
  if (ends_with(w, "s") && w.size() > 1) add(w.substr(0, w.size() - 1));
  if (ends_with(w, "ed") && w.size() > 2) {
    add(w.substr(0, w.size() - 2));
    add(w.substr(0, w.size() - 2) + "e");
    add(w.substr(0, w.size() - 1));  // proposed -> propose
  }
  if (ends_with(w, "ing") && w.size() > 3) {
    add(w.substr(0, w.size() - 3));
    add(w.substr(0, w.size() - 3) + "e");
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace tesim

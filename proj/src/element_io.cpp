#include "wlift/element_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wlift {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

void parse_segment(const std::string& seg, int rank, Word& out) {
  if (seg.empty()) return;
  if (seg.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= seg.size()) {
      std::size_t next = seg.find(',', pos);
      std::string tok = seg.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad index '" + tok + "' in word");
      out.push_back(std::stoi(tok));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : seg) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument(std::string("bad character '") + c + "' in word");
      out.push_back(c - '0');
    }
  }
  for (int i : out)
    if (i < 1 || i > rank) throw std::invalid_argument("simple index " + std::to_string(i) + " out of range");
}

}  // namespace

Word parse_word(const std::string& text, int rank) {
  std::string s = strip(text);
  if (s == "e") s.clear();
  Word out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('-', pos);
    parse_segment(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos), rank, out);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

TwistedWeylElt parse_element(const RootDatum& rd, const std::string& text) {
  std::string s = strip(text);
  int j = 0;
  while (!s.empty() && (s.back() == 'd' || s.back() == 'D')) {
    s.pop_back();
    ++j;
  }
  if (j > 0 && !rd.has_delta()) throw std::invalid_argument("element uses delta but the datum has none");
  return from_word(rd, parse_word(s, rd.rank()), j % rd.delta_order());
}

std::string format_word(const Word& w, int j) {
  bool wide = std::any_of(w.begin(), w.end(), [](int i) { return i > 9; });
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (wide && k) out += ',';
    out += std::to_string(w[k]);
  }
  if (out.empty() && j == 0) out = "e";
  out += std::string(static_cast<std::size_t>(j), 'd');
  return out;
}

std::string format_element(const RootDatum& rd, const TwistedWeylElt& x) {
  return format_word(reduced_word(rd, x.w), x.j);
}

}  // namespace wlift

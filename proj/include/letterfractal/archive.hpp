#pragma once

// Plain-text retrieval from a public-domain archive with a flat on-disk
// cache (one file per archive id).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>

#include "letterfractal/corpus.hpp"
#include "letterfractal/error.hpp"

namespace letterfractal {

struct HttpResponse {
  bool reachable = false;  // false on DNS / connect / TLS failure
  int status = 0;
  std::string body;
};

using HttpGet = std::function<HttpResponse(const std::string& url)>;

// Archive ids are restricted to [A-Za-z0-9_-] so they are safe both in a URL
// and as a cache file name.
inline bool valid_archive_id(std::string_view id) {
  return !id.empty() && id.size() <= 64 && std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c == '-';
  });
}

inline std::string expand_url_template(std::string_view tmpl, std::string_view id) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const auto hit = tmpl.find("{id}", pos);
    out.append(tmpl.substr(pos, hit - pos));
    if (hit == std::string_view::npos) break;
    out.append(id);
    pos = hit + 4;
  }
  return out;
}

// Value of the first "Title:" header line, if any.
inline std::string archive_title(std::string_view body) {
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto nl = body.find('\n', pos);
    auto line = detail::trim(body.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    if (line.starts_with("Title:")) return std::string(detail::trim(line.substr(6)));
    if (line.starts_with("*** START OF")) break;
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return {};
}

class ArchiveClient {
 public:
  ArchiveClient(std::string url_template, std::filesystem::path cache_dir, HttpGet get)
      : url_template_(std::move(url_template)), cache_dir_(std::move(cache_dir)), get_(std::move(get)) {}

  std::filesystem::path cache_path(std::string_view id) const {
    return cache_dir_ / (std::string(id) + ".txt");
  }

  bool cached(std::string_view id) const { return std::filesystem::exists(cache_path(id)); }

  // Returns the document for id, from cache when present. Body is the full
  // archive text; boilerplate stripping is left to the caller.
  RawDocument fetch(std::string_view id) const {
    if (!valid_archive_id(id)) {
      throw Error(ErrorCode::NotFound, "invalid archive id '" + std::string(id) + "'");
    }
    const auto path = cache_path(id);
    std::string body;
    if (std::filesystem::exists(path)) {
      body = read_all(path);
    } else {
      const auto url = expand_url_template(url_template_, id);
      if (!get_) throw Error(ErrorCode::NetworkUnavailable, "no HTTP transport configured");
      const auto resp = get_(url);
      if (!resp.reachable) {
        throw Error(ErrorCode::NetworkUnavailable, "cannot reach " + url);
      }
      if (resp.status == 404 || resp.status == 410) {
        throw Error(ErrorCode::NotFound, "no plain-text edition for '" + std::string(id) + "' at " + url);
      }
      if (resp.status != 200) {
        throw Error(ErrorCode::NetworkUnavailable,
                    url + " answered HTTP " + std::to_string(resp.status));
      }
      body = resp.body;
      store(path, body);
    }
    return RawDocument{std::string(id), archive_title(body), std::move(body),
                       DocumentSource::RemoteArchive};
  }

 private:
  static std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::NotFound, "cannot read cache file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Write to a unique temporary name, then rename into place; concurrent
  // writers of the same id each publish a complete file.
  void store(const std::filesystem::path& path, const std::string& body) const {
    static std::atomic<unsigned> counter{0};
    std::filesystem::create_directories(cache_dir_);
    std::ostringstream tmp_name;
    tmp_name << path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
             << '.' << counter.fetch_add(1) << '.'
             << std::chrono::steady_clock::now().time_since_epoch().count();
    const auto tmp = cache_dir_ / tmp_name.str();
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(body.data(), static_cast<std::streamsize>(body.size()));
      if (!out) throw Error(ErrorCode::InvalidInput, "cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }

  std::string url_template_;
  std::filesystem::path cache_dir_;
  HttpGet get_;
};

}  // namespace letterfractal

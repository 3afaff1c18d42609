#pragma once

// cpp-httplib backed HttpGet for ArchiveClient. Kept apart from archive.hpp so
// code that only reads the cache does not pull in httplib and OpenSSL.

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <string>

#include "letterfractal/archive.hpp"

namespace letterfractal {

inline HttpResponse httplib_get(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return {};
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(15, 0);
  client.set_read_timeout(120, 0);
  auto res = client.Get(path);
  if (!res) return {};
  return HttpResponse{true, res->status, res->body};
}

}  // namespace letterfractal

#pragma once

#include "letterfractal/archive.hpp"
#include "letterfractal/comparison.hpp"
#include "letterfractal/corpus.hpp"
#include "letterfractal/dimensions.hpp"
#include "letterfractal/error.hpp"
#include "letterfractal/fixtures.hpp"
#include "letterfractal/plots.hpp"
#include "letterfractal/regression.hpp"
#include "letterfractal/report_io.hpp"
#include "letterfractal/workbench.hpp"

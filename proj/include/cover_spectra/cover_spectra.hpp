#pragma once

#include "cover_spectra/aomoto.hpp"
#include "cover_spectra/charpoly.hpp"
#include "cover_spectra/corpus.hpp"
#include "cover_spectra/covers.hpp"
#include "cover_spectra/critical_cycles.hpp"
#include "cover_spectra/decide.hpp"
#include "cover_spectra/equivalence.hpp"
#include "cover_spectra/error.hpp"
#include "cover_spectra/gallai_edmonds.hpp"
#include "cover_spectra/generator.hpp"
#include "cover_spectra/graph_io.hpp"
#include "cover_spectra/graph_polynomials.hpp"
#include "cover_spectra/limits.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/polynomial.hpp"
#include "cover_spectra/rational.hpp"
#include "cover_spectra/theta.hpp"

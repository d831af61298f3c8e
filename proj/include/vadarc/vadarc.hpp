#pragma once

#include "vadarc/analytics.hpp"
#include "vadarc/corpus.hpp"
#include "vadarc/csv.hpp"
#include "vadarc/dialogue.hpp"
#include "vadarc/error.hpp"
#include "vadarc/io.hpp"
#include "vadarc/lexicon.hpp"
#include "vadarc/pipeline.hpp"
#include "vadarc/preprocess.hpp"
#include "vadarc/utf8.hpp"
#include "vadarc/viz.hpp"

#pragma once

#define PINCH_VERSION "0.1.0"

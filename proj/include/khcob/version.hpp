#pragma once

#define KHCOB_VERSION "0.1.0"

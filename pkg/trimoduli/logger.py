import sys
import time

from tqdm import tqdm


class Logger(object):
    def __init__(self, frequency=1, silent=False, stream=None):
        self.start_time = time.monotonic_ns()
        self.frequency = max(int(frequency), 1)
        self.silent = silent
        self.stream = stream if stream is not None else sys.stderr

        self.steps = []
        self.logs = []
        self.logs_keys = None

    def _print(self, message):
        print(message, file=self.stream)

    def get_elapsed(self):
        secs = (time.monotonic_ns() - self.start_time) // 1_000_000_000
        return f"{secs // 60:02d}:{secs % 60:02d}"

    def log(self, message):
        if not self.silent:
            self._print(message)

    def log_start(self, title):
        self.start_time = time.monotonic_ns()
        if self.silent:
            return
        self._print(f"\n{title} started")
        self._print("=" * (len(title) + 8))

    def log_step(self, step, custom="", **values):
        self.steps.append(step)
        if self.logs_keys is None:
            self.logs_keys = list(values.keys())
        self.logs.append([values.get(x) for x in self.logs_keys])
        if step % self.frequency != 0 or self.silent:
            return
        logs_message = ""
        for key in self.logs_keys:
            logs_message += f" {key}: {values.get(key)}"
        self._print(f"#: {step:6d}" + logs_message + " " + custom)

    def log_end(self, title, custom=""):
        if self.silent:
            return
        self._print("=" * (len(title) + 9))
        self._print(f"{title} finished: duration = {self.get_elapsed()}  " + custom)

    def get_logs(self):
        """Return (header, rows) of every logged step."""
        header = ["step"] + (self.logs_keys or [])
        rows = [[s] + row for s, row in zip(self.steps, self.logs)]
        return header, rows

    def progress(self, iterable, desc=None, total=None):
        return tqdm(iterable, desc=desc, total=total, disable=self.silent,
                    file=self.stream, leave=False)


def silent_logger():
    return Logger(silent=True)


def ensure_logger(logger):
    return logger if logger is not None else silent_logger()

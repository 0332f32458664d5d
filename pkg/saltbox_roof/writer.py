# coding=utf-8
"""Text and CSV output with locale-free numbers and atomic file replacement."""
import csv
import io
import os
import tempfile


def format_number(value):
    """Get the shortest text that round-trips a number.

    Integral floats drop their trailing '.0' so that 0.0 is written as '0' and
    1.0 as '1'. Negative zero is written as '0'.
    """
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    value = float(value)
    if value == 0:
        return '0'
    text = repr(value)
    if text.endswith('.0'):
        text = text[:-2]
    return text


def csv_text(header, rows):
    """Get CSV text with a header row, comma separators and LF line endings.

    Args:
        header: A list of column names.
        rows: An iterable of row sequences. Numbers are written with format_number.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [v if isinstance(v, str) else format_number(v) for v in row])
    return buffer.getvalue()


def _current_umask():
    umask = os.umask(0)
    os.umask(umask)
    return umask


def write_atomic(path, text):
    """Write text to a file through a temporary file and a rename.

    The temporary file is created next to the target so that the final rename
    never crosses a file system. It gets the permissions of a newly created
    file under the current umask instead of the private mode of mkstemp.

    Args:
        path: Path of the file to write. An existing file is replaced.
        text: The text to write.

    Returns:
        The absolute path of the written file.
    """
    path = os.path.abspath(path)
    folder = os.path.dirname(path)
    fd, temp_path = tempfile.mkstemp(prefix='.saltbox_', suffix='.tmp', dir=folder)
    try:
        with io.open(fd, 'w', encoding='utf-8', newline='') as outf:
            outf.write(text)
        os.chmod(temp_path, 0o666 & ~_current_umask())
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise
    return path

""" Scatter and pin plots of integer sequences as standalone SVG text """
import logging
import math

logger = logging.getLogger(__name__)

WIDTH = 800
HEIGHT = 600
MARGIN = 60

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(width)d" height="%(height)d" viewBox="0 0 %(width)d %(height)d" version="1.1"
    xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="%(width)d" height="%(height)d" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""


class Frame(object):
    """ Maps data coordinates onto the drawing area inside the margins """

    def __init__(self, x_range, y_range):
        self.x_min, self.x_max = x_range
        self.y_min, self.y_max = y_range

    def _scale(self, v, lo, hi, length):
        if hi == lo:
            return length / 2
        return (v - lo) / (hi - lo) * length

    def x(self, v):
        return MARGIN + self._scale(v, self.x_min, self.x_max, WIDTH - 2 * MARGIN)

    def y(self, v):
        return HEIGHT - MARGIN - self._scale(v, self.y_min, self.y_max, HEIGHT - 2 * MARGIN)


class SVG(object):

    def __init__(self):
        self.commands = []

    def render(self):
        width, height = WIDTH, HEIGHT
        return PREAMBLE % locals() + ''.join(c + '\n' for c in self.commands) + POSTAMBLE

    def save(self, filename):
        logger.debug('Writing plot {}'.format(filename))
        with open(filename, 'w') as f:
            f.write(self.render())

    def circle(self, x, y, radius=1.5, colour='#000000'):
        self.commands.append(
            '<circle cx="%.2f" cy="%.2f" r="%.2f" style="fill:%s"/>' % (x, y, radius, colour))

    def line(self, points, colour='#000000', width=1.0):
        self.commands.append(
            '<polyline points="%s" style="fill:none;stroke:%s;stroke-width:%.2f"/>' % (
                ' '.join('%.2f,%.2f' % p for p in points), colour, width))

    def text(self, x, y, text, anchor='middle'):
        self.commands.append(
            '<text x="%.2f" y="%.2f" text-anchor="%s" font-size="14" font-family="serif">%s</text>' % (
                x, y, anchor, text))


def _axes(svg, frame, y_label):
    left, right = frame.x(frame.x_min), frame.x(frame.x_max)
    bottom, top = frame.y(frame.y_min), frame.y(frame.y_max)
    svg.line([(MARGIN, HEIGHT - MARGIN), (WIDTH - MARGIN, HEIGHT - MARGIN)])
    svg.line([(MARGIN, HEIGHT - MARGIN), (MARGIN, MARGIN)])
    svg.text(WIDTH / 2, HEIGHT - MARGIN / 3, 'n')
    svg.text(MARGIN / 3, HEIGHT / 2, y_label)
    svg.text(left, HEIGHT - MARGIN / 1.5, str(frame.x_min))
    svg.text(right, HEIGHT - MARGIN / 1.5, str(frame.x_max))
    svg.text(MARGIN - 6, bottom, _tick(frame.y_min), anchor='end')
    svg.text(MARGIN - 6, top, _tick(frame.y_max), anchor='end')


def _tick(v):
    return str(int(v)) if float(v).is_integer() else '%.2f' % v


def scatter(terms, diagonal=False):
    """ One dot per term at (n, a(n)); ``diagonal`` adds the line a(n) = n """
    if not terms:
        raise ValueError('Nothing to plot')
    xs = [t[0] for t in terms]
    ys = [t[1] for t in terms]
    frame = Frame((min(xs), max(xs)), (min(ys), max(ys)))

    svg = SVG()
    _axes(svg, frame, 'a(n)')
    if diagonal:
        lo = max(frame.x_min, frame.y_min)
        hi = min(frame.x_max, frame.y_max)
        if lo < hi:
            svg.line([(frame.x(lo), frame.y(lo)), (frame.x(hi), frame.y(hi))], colour='#c03030')
    for n, v in zip(xs, ys):
        svg.circle(frame.x(n), frame.y(v))
    return svg.render()


def pinplot(terms, log=False):
    """ A vertical pin from the axis up to a(n) for each term """
    if not terms:
        raise ValueError('Nothing to plot')
    xs = [t[0] for t in terms]
    ys = [t[1] for t in terms]
    if log:
        if min(ys) <= 0:
            raise ValueError('A log scale needs positive values')
        ys = [math.log10(v) for v in ys]
    base = 0 if log else min(0, min(ys))
    frame = Frame((min(xs), max(xs)), (base, max(max(ys), base)))

    svg = SVG()
    _axes(svg, frame, 'log10 a(n)' if log else 'a(n)')
    for n, v in zip(xs, ys):
        svg.line([(frame.x(n), frame.y(base)), (frame.x(n), frame.y(v))], colour='#303080')
    return svg.render()


def plot(terms, style='scatter', diagonal=False, log=False):
    if style == 'scatter':
        return scatter(terms, diagonal)
    if style == 'pinplot':
        return pinplot(terms, log)
    raise ValueError('Unknown plot style {!r}'.format(style))
